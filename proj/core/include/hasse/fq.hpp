#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hasse {

// Residue in [0, q). All arithmetic goes through an Fq context so the
// modulus is explicit at every call site.
using FqElem = std::uint32_t;

// The prime field F_q. Most of the library requires q odd; the odd-q
// restriction is enforced where quadratic extensions enter (QuadExt,
// Legendre symbols), not here.
class Fq {
public:
    explicit Fq(std::uint32_t q) : q_(q) {
        if (q < 2 || !is_prime_u32(q))
            throw std::invalid_argument("Fq: modulus must be prime");
    }

    std::uint32_t q() const { return q_; }
    bool odd() const { return (q_ & 1u) != 0; }

    FqElem reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(q_);
        if (r < 0) r += q_;
        return static_cast<FqElem>(r);
    }
    FqElem add(FqElem a, FqElem b) const {
        std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    FqElem sub(FqElem a, FqElem b) const { return a >= b ? a - b : a + q_ - b; }
    FqElem neg(FqElem a) const { return a == 0 ? 0 : q_ - a; }
    FqElem mul(FqElem a, FqElem b) const {
        return static_cast<FqElem>((static_cast<std::uint64_t>(a) * b) % q_);
    }
    FqElem pow(FqElem a, std::uint64_t e) const {
        FqElem r = 1;
        FqElem base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    FqElem inv(FqElem a) const {
        if (a == 0) throw std::domain_error("Fq: inverse of zero");
        return pow(a, q_ - 2);
    }

    // Quadratic character of a unit; 0 is not a unit.
    bool is_square_unit(FqElem a) const {
        if (a == 0) throw std::domain_error("Fq: character of zero");
        if (q_ == 2) return true;
        return pow(a, (q_ - 1) / 2) == 1;
    }

    // Smallest non-square unit; requires q odd.
    FqElem nonsquare_unit() const {
        if (!odd()) throw std::domain_error("Fq: no non-square unit for q = 2");
        for (FqElem a = 2; a < q_; ++a)
            if (!is_square_unit(a)) return a;
        throw std::logic_error("Fq: non-square unit not found");
    }

    std::vector<FqElem> units() const {
        std::vector<FqElem> u(q_ - 1);
        for (std::uint32_t i = 1; i < q_; ++i) u[i - 1] = i;
        return u;
    }

    bool operator==(const Fq& o) const { return q_ == o.q_; }

private:
    static bool is_prime_u32(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint32_t q_;
};

} // namespace hasse
