#pragma once

#include <utility>
#include <vector>

#include "hasse/abelian.hpp"
#include "hasse/extfield.hpp"
#include "hasse/symbols.hpp"

namespace hasse {

// Hyperelliptic model y^2 = d(x) with deg d odd (a single place at infinity)
// and d square-free; genus (deg d - 1)/2. Requires q odd.
class HyperCurve {
public:
    HyperCurve(const Fq& F, Poly d);

    const Fq& field() const { return F_; }
    const Poly& rhs() const { return d_; }
    unsigned genus() const { return g_; }
    FqElem lead() const { return d_.lc(); }

private:
    Fq F_;
    Poly d_;
    unsigned g_;
};

// Reduced divisor in Mumford form: u monic, deg v < deg u <= genus,
// u | v^2 - d. The identity class is (1, 0).
struct MumfordDivisor {
    Poly u = Poly::constant(1);
    Poly v;
    bool operator==(const MumfordDivisor& o) const { return u == o.u && v == o.v; }
};

MumfordDivisor mumford_make(const HyperCurve& C, Poly u, Poly v);
inline bool mumford_is_identity(const MumfordDivisor& D) { return D.u.is_one(); }
MumfordDivisor mumford_neg(const HyperCurve& C, const MumfordDivisor& D);

// Exact number of projective points of y^2 = d(x) over F_{q^k} (including
// the single point at infinity of the odd-degree model).
std::uint64_t count_points(const HyperCurve& C, unsigned k);

// Numerator of the zeta function, degree 2g, from the counts N_1..N_g via
// Newton's identities plus the functional equation c_{2g-i} = q^{g-i} c_i.
// h = L(1) is the divisor class number.
struct LPoly {
    std::vector<Int> c;
    Int h = 1;
};
LPoly l_polynomial(const HyperCurve& C);

// Evaluation data for building functions with prescribed divisors: the point
// (x0, y0) over an inert prime p (x0 a root of p, y0 = sqrt(d(x0)) in the
// quadratic extension of the residue field) and the leading-coefficient
// bookkeeping at the infinite place.
struct MillerContext {
    ExtField E2;      // F_p^(2) = F_{q^{2 deg p}}
    ExtElem x0, y0;
    Poly p;           // the inert prime
    FqElem delta;     // leading coefficient of the model
    unsigned genus;
};
MillerContext make_miller_context(const HyperCurve& C, const PrimePoly& p);

// Function value tracked as (value at (x0, y0), pole order at infinity,
// leading coefficient at infinity w.r.t. the uniformizer x^g / y).
struct MillerTriple {
    ExtElem val;
    long long ord = 0;
    FqElem lead = 1;
};
MillerTriple miller_one(const MillerContext& ctx);
void miller_mul(const MillerContext& ctx, MillerTriple& acc, const MillerTriple& f);
void miller_square(const MillerContext& ctx, MillerTriple& acc);
// Multiply by p(x)^e (a function of x alone).
void miller_mul_poly(const MillerContext& ctx, MillerTriple& acc, const Poly& p, long long e);
// Multiply by (y - v(x))^e.
void miller_mul_line(const MillerContext& ctx, MillerTriple& acc, const Poly& v, long long e);
// The honest value of the accumulated function at infinity exists only when
// the total pole order vanishes.
ExtElem miller_normalized_value(const MillerContext& ctx, const MillerTriple& f);

// Cantor composition + reduction. When ctx/acc are given, the function h
// with div(h) = D1 + D2 - D3 is multiplied into acc.
MumfordDivisor cantor_add(const HyperCurve& C, const MumfordDivisor& a, const MumfordDivisor& b,
                          const MillerContext* ctx = nullptr, MillerTriple* acc = nullptr);
MumfordDivisor mumford_scalar(const HyperCurve& C, const MumfordDivisor& D, const Int& n);
// n-fold Miller ladder: returns the class of n D and f with
// div(f) = n D - (reduced representative of n D).
std::pair<MumfordDivisor, MillerTriple> miller_scalar(const HyperCurve& C,
                                                      const MillerContext& ctx,
                                                      const MumfordDivisor& D, const Int& n);

// Value of the function with divisor sum e_i (A_i - deg(A_i) inf), evaluated
// at the point over p and normalized by the leading coefficient at infinity.
// The combination must be principal (zero class); supports never meet the
// point over an inert prime.
ExtElem miller_evaluate(const HyperCurve& C, const MillerContext& ctx,
                        const std::vector<std::pair<MumfordDivisor, long long>>& relation);

// Square root of a modulo a monic irreducible w; a must be a nonzero square
// mod w. Returns the canonical choice (smaller representative).
Poly sqrt_mod_prime(const Fq& F, const Poly& a, const Poly& w);

MumfordDivisor random_divisor(const HyperCurve& C, Rng& rng);

struct Pic0Gen {
    MumfordDivisor gen;
    Int order;
};
// Structure of Pic^0 with an independent generating set: invariant factors
// d_1 | ... | d_k with prod = L(1), each generator of exact order d_i.
struct Pic0Data {
    LPoly L;
    AbGroupStruct structure; // free_rank 0
    std::vector<Pic0Gen> basis;
};
Pic0Data group_structure(const HyperCurve& C, std::uint64_t seed = Rng::kDefaultSeed,
                         unsigned budget = 512);

// Ray class group of modulus P * infinity for an inert prime p of the
// imaginary quadratic extension: 1 -> (F_p^(2))^x -> ray -> Cl_K -> 1.
struct RayClassData {
    Pic0Data pic0;
    AbGroupStruct cl_k; // Z x Pic0 torsion
    AbGroupStruct ray;  // Z x torsion of order kernel_order * h
    Int kernel_order;   // |p|^2 - 1
};
RayClassData ray_class_structure(const QuadExt& K, const PrimePoly& p,
                                 std::uint64_t seed = Rng::kDefaultSeed);

// Obstruction from the class-group surjection criterion: no surjection
// ray ->> Z((|p|^2-1)/(q^2-1)) x Cl_K means no rational point.
struct GlobalObstruction {
    bool obstructed = false;
    Int z_order;
    AbGroupStruct target;
    RayClassData groups;
};
GlobalObstruction check_global_obstruction(const QuadExt& K, const PrimePoly& p,
                                           std::uint64_t seed = Rng::kDefaultSeed);

} // namespace hasse
