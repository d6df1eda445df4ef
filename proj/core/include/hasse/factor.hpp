#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hasse/poly.hpp"
#include "hasse/rng.hpp"

namespace hasse {

// Rabin's test: f irreducible over F_q iff T^(q^n) = T mod f and
// gcd(T^(q^(n/t)) - T, f) = 1 for every prime t | n. Constant input is an error.
bool is_irreducible(const Fq& F, const Poly& f);

// Monic irreducible polynomial, verified at construction.
class PrimePoly {
public:
    PrimePoly(const Fq& F, Poly p) : p_(poly_monic(F, std::move(p))) {
        if (!is_irreducible(F, p_))
            throw std::invalid_argument("PrimePoly: polynomial is not irreducible");
    }
    static PrimePoly unchecked(Poly p) { return PrimePoly(std::move(p), 0); }

    const Poly& poly() const { return p_; }
    int deg() const { return p_.deg(); }
    bool operator==(const PrimePoly& o) const { return p_ == o.p_; }

private:
    PrimePoly(Poly p, int) : p_(std::move(p)) {}
    Poly p_;
};

struct PolyFactor {
    Poly prime;    // monic irreducible
    unsigned mult; // multiplicity >= 1
};

struct Factorization {
    FqElem unit = 1;                 // leading unit
    std::vector<PolyFactor> factors; // sorted by (degree, coefficients)
};

// Square-free + distinct-degree + equal-degree (Cantor-Zassenhaus) with a
// seeded deterministic generator; output order is canonical, so the result
// does not depend on the seed. Requires q odd for the equal-degree split
// (every call site has q odd); zero input is an error.
Factorization factorize(const Fq& F, const Poly& f, std::uint64_t seed = Rng::kDefaultSeed);

bool is_squarefree(const Fq& F, const Poly& f);

// Product of the distinct monic irreducible factors of f.
Poly radical(const Fq& F, const Poly& f, std::uint64_t seed = Rng::kDefaultSeed);

// All monic irreducibles of degree d, in index order (constant coefficient
// fastest); the callback may return false to stop early.
void for_each_monic_irreducible(const Fq& F, int d,
                                const std::function<bool(const Poly&)>& fn);
std::vector<Poly> list_monic_irreducibles(const Fq& F, int d);

// Process-wide memoized prime tables for repeated sweeps; only degrees with
// q^d below a fixed size are cached, larger degrees fall back to streaming.
// Returns nullptr when the degree is not cached.
const std::vector<Poly>* cached_monic_irreducibles(const Fq& F, int d);

// Sieve of composite monic polynomials of degree d, indexed like
// poly_from_index: bitmap[i] is true iff the monic polynomial with index i
// has an irreducible factor of degree <= d/2 (i.e. is reducible). Built by
// enumerating products of primes with monic cofactors.
std::vector<bool> composite_sieve(const Fq& F, int d);

} // namespace hasse
