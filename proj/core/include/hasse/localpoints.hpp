#pragma once

#include <vector>

#include "hasse/integer.hpp"
#include "hasse/symbols.hpp"

namespace hasse {

// Genus of the quaternionic curve with discriminant p q:
// 1 + (|p|-1)(|q|-1)/(q^2-1), minus 2q/(q+1) when both degrees are odd.
// Evaluated exactly in rationals; non-integral results are a hard error.
Int genus_xd(const Fq& F, const PrimePoly& p, const PrimePoly& qp);

struct PlaceRef {
    bool at_infinity = false;
    Poly prime; // meaningful when finite
};

struct LocalWitness {
    enum class Kind { Rule, Mu, AC, Cutoff } kind = Kind::Rule;
    FqElem mu = 0; // Kind::Mu
    Poly a;        // Kind::AC
    FqElem c = 0;  // Kind::AC
};

struct LocalVerdict {
    PlaceRef place;
    SplitType in_k = SplitType::Inert;
    bool nonempty = false;
    LocalWitness witness;
};

LocalVerdict local_at_infinity(const Fq& F, const QuaternionD& D, const QuadExt& K);
// v must ramify in D.
LocalVerdict local_at_ramified(const Fq& F, const QuaternionD& D, const QuadExt& K,
                               const PrimePoly& v);
// l must not ramify in D.
LocalVerdict local_at_good(const Fq& F, const QuaternionD& D, const QuadExt& K,
                           const PrimePoly& l);

// Recheck a verdict's witness from scratch (quadratic residue symbols only).
bool verify_local_verdict(const Fq& F, const QuaternionD& D, const QuadExt& K,
                          const LocalVerdict& v);

struct DegreeStats {
    unsigned degree = 0;
    std::uint64_t primes = 0;   // monic irreducibles of this degree (minus Ram(D))
    std::uint64_t split = 0;    // split in K
    std::uint64_t ramified = 0; // ramified in K
    std::uint64_t inert = 0;    // inert in K (nonempty by rule)
    std::uint64_t empty = 0;    // places with no local point
};

struct LocalSweep {
    bool all_nonempty = false;
    unsigned cutoff_degree = 0; // >= cutoff: nonempty by the point-count bound
    LocalVerdict infinity;
    std::vector<LocalVerdict> ramified_d;
    // K-ramified places, all empty places, and split places of degree
    // <= detail_max_degree carry explicit witnesses here.
    std::vector<LocalVerdict> detailed;
    std::vector<DegreeStats> stats;
};

// Verdicts at infinity, at Ram(D), and at every split/ramified place of
// degree below the cutoff 2 (deg p + deg q); inert and above-cutoff places
// are nonempty by rule. The exact positivity of the point-count bound at the
// cutoff is asserted with integer arithmetic.
LocalSweep local_everywhere(const Fq& F, const QuaternionD& D, const QuadExt& K,
                            unsigned detail_max_degree = 6, unsigned threads = 0);

} // namespace hasse
