#include "hasse/symbols.hpp"

#include <stdexcept>

namespace hasse {

const char* to_string(SplitType t) {
    switch (t) {
        case SplitType::Split: return "split";
        case SplitType::Inert: return "inert";
        case SplitType::Ramified: return "ramified";
    }
    return "?";
}

int legendre(const Fq& F, const Poly& a, const PrimePoly& p) {
    if (!F.odd()) throw std::domain_error("legendre: requires odd q");
    const Poly r = poly_mod(F, a, p.poly());
    if (r.is_zero()) return 0;
    std::uint64_t norm = 1;
    for (int i = 0; i < p.deg(); ++i) {
        if (norm > (1ull << 62) / F.q())
            throw std::overflow_error("legendre: |p| too large for this build");
        norm *= F.q();
    }
    const Poly c = poly_powmod(F, r, (norm - 1) / 2, p.poly());
    if (c.is_one()) return 1;
    if (poly_cmp(c, Poly::constant(F.neg(1))) == 0) return -1;
    throw std::logic_error("legendre: character value is not +-1");
}

bool reciprocity_check(const Fq& F, const PrimePoly& f, const PrimePoly& g) {
    if (f == g) throw std::invalid_argument("reciprocity_check: equal inputs");
    const int lhs = legendre(F, f.poly(), g) * legendre(F, g.poly(), f);
    const std::uint64_t e = static_cast<std::uint64_t>((F.q() - 1) / 2) *
                            static_cast<std::uint64_t>(f.deg()) *
                            static_cast<std::uint64_t>(g.deg());
    const int rhs = (e % 2 == 0) ? 1 : -1;
    return lhs == rhs;
}

QuadExt::QuadExt(const Fq& F, Poly d) : F_(F), d_(std::move(d)) {
    if (!F_.odd()) throw std::invalid_argument("QuadExt: requires odd q");
    if (d_.deg() < 1) throw std::invalid_argument("QuadExt: discriminant must be nonconstant");
    if (!is_squarefree(F_, d_)) throw std::invalid_argument("QuadExt: discriminant must be square-free");
    if (d_.deg() % 2 == 1) {
        inf_ = SplitType::Ramified;
    } else {
        inf_ = F_.is_square_unit(d_.lc()) ? SplitType::Split : SplitType::Inert;
    }
}

SplitType place_split_type(const QuadExt& K, const PrimePoly& v) {
    const int s = legendre(K.field(), K.disc(), v);
    if (s == 0) return SplitType::Ramified;
    return s == 1 ? SplitType::Split : SplitType::Inert;
}

QuaternionD::QuaternionD(PrimePoly p, PrimePoly q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_ == q_) throw std::invalid_argument("QuaternionD: ramified primes must be distinct");
}

bool quaternion_split_by(const Fq& F, const QuaternionD& D, const QuadExt& K) {
    return place_split_type(K, D.p()) != SplitType::Split &&
           place_split_type(K, D.q()) != SplitType::Split;
}

} // namespace hasse
