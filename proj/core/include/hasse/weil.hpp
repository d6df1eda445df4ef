#pragma once

#include <string>
#include <vector>

#include "hasse/factor.hpp"
#include "hasse/symbols.hpp"

namespace hasse {

// Candidate Frobenius datum at the prime y: the pair (t, mu) encoding
// X^2 - t X + mu y. Admissible iff deg t <= deg(y)/2, mu a unit, and
// t^2 - 4 mu y is not a square in F_inf (odd degree, or even degree with
// non-square leading coefficient). Only d = 2 is implemented.
struct WeilDatum {
    Poly t;
    FqElem mu;
};

// m = d (q^d - 1) with d = 2.
std::uint64_t weil_m(const Fq& F);
// n' = d (q^(s d) - 1)/(q^s - 1) (q^d - 1) = 2 (q^s + 1)(q^2 - 1) for d = 2.
std::uint64_t weil_nprime(const Fq& F, unsigned s);

// All admissible (t, mu) in deterministic (t, mu) order.
std::vector<WeilDatum> enumerate_weil(const Fq& F, const PrimePoly& y);

// pi^r + pi'^r via s_0 = 2, s_1 = t, s_r = t s_{r-1} - mu y s_{r-2}.
Poly power_sum(const Fq& F, const WeilDatum& w, const PrimePoly& y, std::uint64_t r);

// { pi^(2m) + pi'^(2m) }, deduplicated and sorted.
std::vector<Poly> c_set(const Fq& F, const PrimePoly& y);

// { Nr_{F_{q^s}(T)/F}(c - (eps + eps^{-1}) y^m) : c in C(y), eps a generator
// of the norm-one subgroup of F_{q^{2s}}^x }. Only the generators (exact
// order q^s + 1) enter: with the full norm-one subgroup the divisibility
// criterion is vacuous, since eps = pi^(2m)/y^m is itself norm-one and
// solves the congruence for every admissible datum. The full-range variant
// is kept below for reference.
std::vector<Poly> d_set(const Fq& F, const PrimePoly& y, unsigned s);

// Same elements with eps over the entire norm-one subgroup.
std::vector<Poly> d_set_full(const Fq& F, const PrimePoly& y, unsigned s);

// { Nr_{F(pi)/F}(pi^(2n') - y^(n')) : pi } via exponentiation in A[X]/(X^2 - tX + mu y).
std::vector<Poly> dprime_set(const Fq& F, const PrimePoly& y, unsigned s);

// Monic irreducible divisors of the nonzero values, deduplicated and sorted.
std::vector<Poly> prime_set(const Fq& F, const std::vector<Poly>& values,
                            std::uint64_t seed = Rng::kDefaultSeed);

bool sorted_contains(const std::vector<Poly>& sorted, const Poly& p);

// Memoized P(y, s) / P'(y, s) for repeated sweeps.
std::vector<Poly> cached_congruence_prime_set(const Fq& F, const PrimePoly& y, unsigned s,
                                              bool prime_variant, std::uint64_t seed);

struct BulletOutcome {
    std::string name;
    bool ok;
    std::string detail;
};

enum class GlobalOutcome { Obstructed, Inconclusive };

struct CongruenceVerdict {
    GlobalOutcome outcome = GlobalOutcome::Inconclusive;
    std::vector<BulletOutcome> bullets;
    std::vector<Poly> prime_set_used; // P(y, s) or P'(y, s)
    unsigned s = 0;
    bool obstructed() const { return outcome == GlobalOutcome::Obstructed; }
};

// Congruence criterion with P(y, deg p): needs K to split D, y ramified in K,
// y outside Ram(D), p absent from P(y, deg p), and F(sqrt(mu y)) failing to
// split D for every unit mu.
CongruenceVerdict check_thm_main2(const Fq& F, const PrimePoly& p, const PrimePoly& qp,
                                  const PrimePoly& y, const QuadExt& K,
                                  std::uint64_t seed = Rng::kDefaultSeed);

// Same bullets with P'(y, deg p).
CongruenceVerdict check_thm_main1(const Fq& F, const PrimePoly& p, const PrimePoly& qp,
                                  const PrimePoly& y, const QuadExt& K,
                                  std::uint64_t seed = Rng::kDefaultSeed);

} // namespace hasse
