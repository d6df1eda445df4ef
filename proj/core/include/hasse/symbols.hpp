#pragma once

#include "hasse/factor.hpp"
#include "hasse/poly.hpp"

namespace hasse {

enum class SplitType { Split, Inert, Ramified };

const char* to_string(SplitType t);

// Quadratic residue symbol (a/p): 0 if p | a, else +1 or -1 according to
// whether a is a square modulo p. Computed as (a mod p)^((|p|-1)/2).
// Requires q odd.
int legendre(const Fq& F, const Poly& a, const PrimePoly& p);

// Checks the reciprocity identity (f/g)(g/f) = (-1)^((q-1)/2 deg f deg g)
// for distinct monic irreducibles. Always true; exposed as a self-test.
bool reciprocity_check(const Fq& F, const PrimePoly& f, const PrimePoly& g);

// The quadratic extension K = F(sqrt(d)) for square-free nonconstant d.
// d need not be monic; the leading unit decides the behaviour at infinity.
class QuadExt {
public:
    QuadExt(const Fq& F, Poly d);

    const Fq& field() const { return F_; }
    const Poly& disc() const { return d_; }
    SplitType infinity_type() const { return inf_; }
    // Genus of the hyperelliptic model y^2 = d(x).
    unsigned genus() const { return static_cast<unsigned>((d_.deg() - 1) / 2); }

private:
    Fq F_;
    Poly d_;
    SplitType inf_;
};

// Splitting of a finite place v in K.
SplitType place_split_type(const QuadExt& K, const PrimePoly& v);

// Quaternion algebra over F ramified at exactly two finite primes and split
// at infinity.
class QuaternionD {
public:
    QuaternionD(PrimePoly p, PrimePoly q);
    const PrimePoly& p() const { return p_; }
    const PrimePoly& q() const { return q_; }

private:
    PrimePoly p_, q_;
};

// D tensor K = M_2(K) iff no ramified prime of D splits in K: a quadratic
// extension doubles the local invariant 1/2 exactly at the non-split places.
bool quaternion_split_by(const Fq& F, const QuaternionD& D, const QuadExt& K);

} // namespace hasse
