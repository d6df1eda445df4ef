#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hasse/fq.hpp"

namespace hasse {

// Element of A = F_q[T], dense coefficients, index i = coefficient of T^i.
// Canonical form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector and degree -1.
struct Poly {
    std::vector<FqElem> c;

    Poly() = default;
    explicit Poly(std::vector<FqElem> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly{}; }
    static Poly constant(FqElem a) { return a == 0 ? Poly{} : Poly{{a}}; }
    // T^k with coefficient a.
    static Poly term(FqElem a, std::size_t k) {
        if (a == 0) return Poly{};
        Poly p;
        p.c.assign(k + 1, 0);
        p.c[k] = a;
        return p;
    }

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    FqElem lc() const { return c.empty() ? 0 : c.back(); }
    FqElem coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return c != o.c; }
};

Poly poly_add(const Fq& F, const Poly& a, const Poly& b);
Poly poly_sub(const Fq& F, const Poly& a, const Poly& b);
Poly poly_neg(const Fq& F, const Poly& a);
Poly poly_mul(const Fq& F, const Poly& a, const Poly& b);
Poly poly_scale(const Fq& F, const Poly& a, FqElem s);
// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divrem(const Fq& F, const Poly& a, const Poly& b);
Poly poly_mod(const Fq& F, const Poly& a, const Poly& b);
Poly poly_div_exact(const Fq& F, const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Fq& F, const Poly& a, const Poly& b);
// g = gcd(a, b) monic, with g = s*a + t*b.
Poly poly_ext_gcd(const Fq& F, const Poly& a, const Poly& b, Poly& s, Poly& t);
Poly poly_derivative(const Fq& F, const Poly& a);
Poly poly_monic(const Fq& F, const Poly& a);
FqElem poly_eval(const Fq& F, const Poly& a, FqElem x);
Poly poly_pow(const Fq& F, const Poly& a, std::uint64_t e);
// Exact square root when a is a square in A; empty otherwise.
std::optional<Poly> poly_sqrt(const Fq& F, const Poly& a);
// a^e mod m.
Poly poly_powmod(const Fq& F, const Poly& a, std::uint64_t e, const Poly& m);
// T^(q^k) mod m computed by iterated q-th powers.
Poly poly_frobenius_powmod(const Fq& F, const Poly& start, unsigned k, const Poly& m);

// Total order: degree first, then coefficients from the highest power down.
int poly_cmp(const Poly& a, const Poly& b);
struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const { return poly_cmp(a, b) < 0; }
};

// Text format: terms c*T^k / T^k / c joined by '+'; printer emits descending
// powers, omits zero terms and unit coefficients, e.g. "T^6+2*T^4+T^2+2*T+2".
std::string poly_to_string(const Fq& F, const Poly& a);
Poly poly_parse(const Fq& F, const std::string& text);

// Monic polynomial of degree d whose lower coefficients are the base-q
// digits of index (constant coefficient = least significant digit).
Poly poly_from_index(const Fq& F, int d, std::uint64_t index);

} // namespace hasse
