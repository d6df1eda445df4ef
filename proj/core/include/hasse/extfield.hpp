#pragma once

#include <cstdint>
#include <vector>

#include "hasse/integer.hpp"
#include "hasse/poly.hpp"
#include "hasse/rng.hpp"

namespace hasse {

// Element of F_{q^n}: residue of degree < n modulo the field's fixed monic
// irreducible modulus.
struct ExtElem {
    Poly rep;
    bool operator==(const ExtElem& o) const { return rep == o.rep; }
    bool operator!=(const ExtElem& o) const { return rep != o.rep; }
};

struct ExtElemHash {
    std::size_t operator()(const ExtElem& x) const {
        std::size_t h = x.rep.c.size();
        for (FqElem v : x.rep.c) h = h * 1099511628211ull + v + 0x9e3779b9u;
        return h;
    }
};

// F_{q^n} with the modulus chosen deterministically: the smallest monic
// irreducible of degree n in (degree, descending-power coefficient) order.
// No Conway polynomial tables; the choice is reproducible.
class ExtField {
public:
    ExtField(const Fq& F, unsigned n);
    // Quotient ring representation A/(w) for an explicit monic irreducible w
    // (residue fields of specific primes).
    static ExtField with_modulus(const Fq& F, Poly w);

    const Fq& base() const { return F_; }
    std::uint32_t q() const { return F_.q(); }
    unsigned degree() const { return n_; }
    const Poly& modulus() const { return mod_; }
    // q^n as a 64-bit value; the library works at desk scale.
    std::uint64_t card() const { return card_; }
    std::uint64_t unit_order() const { return card_ - 1; }

    ExtElem zero() const { return ExtElem{Poly{}}; }
    ExtElem one() const { return ExtElem{Poly::constant(1)}; }
    ExtElem gen() const { return from_poly(Poly::term(1, 1)); }
    ExtElem from_fq(FqElem a) const { return ExtElem{Poly::constant(a)}; }
    ExtElem from_poly(const Poly& p) const { return ExtElem{poly_mod(F_, p, mod_)}; }
    // Element whose coefficient vector is the base-q digits of index.
    ExtElem from_index(std::uint64_t index) const;

    bool is_zero(const ExtElem& x) const { return x.rep.is_zero(); }
    ExtElem add(const ExtElem& a, const ExtElem& b) const { return ExtElem{poly_add(F_, a.rep, b.rep)}; }
    ExtElem sub(const ExtElem& a, const ExtElem& b) const { return ExtElem{poly_sub(F_, a.rep, b.rep)}; }
    ExtElem neg(const ExtElem& a) const { return ExtElem{poly_neg(F_, a.rep)}; }
    ExtElem mul(const ExtElem& a, const ExtElem& b) const {
        return ExtElem{poly_mod(F_, poly_mul(F_, a.rep, b.rep), mod_)};
    }
    ExtElem mul_fq(const ExtElem& a, FqElem s) const { return ExtElem{poly_scale(F_, a.rep, s)}; }
    ExtElem inv(const ExtElem& a) const;
    ExtElem div(const ExtElem& a, const ExtElem& b) const { return mul(a, inv(b)); }
    ExtElem pow(const ExtElem& a, std::uint64_t e) const;
    ExtElem frobenius(const ExtElem& a) const { return pow(a, F_.q()); }

    // x^(q^n - 1)/(q^m - 1) for m | n: the norm onto the degree-m subfield.
    ExtElem norm_to_subfield(const ExtElem& x, unsigned m) const;
    // sum of x^(q^(m i)) for i < n/m: the trace onto the degree-m subfield.
    ExtElem trace_to_subfield(const ExtElem& x, unsigned m) const;

    // Quadratic character of a nonzero element (q odd).
    bool is_square(const ExtElem& x) const;
    // Tonelli-Shanks; input must be a nonzero square. Returns the root whose
    // representative is smaller in the canonical polynomial order.
    ExtElem sqrt(const ExtElem& x) const;

    // Residue of the prime field, for elements whose representative is constant.
    FqElem to_fq(const ExtElem& x) const;
    bool in_prime_field(const ExtElem& x) const { return x.rep.deg() <= 0; }

    // Smallest generator of the unit group in canonical element order.
    ExtElem unit_group_generator() const;

    // Horner evaluation of an F_q[T] polynomial at a field element.
    ExtElem eval_poly(const Poly& p, const ExtElem& x) const;

    bool operator==(const ExtField& o) const { return F_ == o.F_ && n_ == o.n_; }

private:
    struct ExplicitModulus {};
    ExtField(const Fq& F, Poly w, ExplicitModulus);
    void check_subfield(unsigned m) const;

    Fq F_;
    unsigned n_;
    Poly mod_;
    std::uint64_t card_;
};

// Dense polynomial over an extension field (for root finding and norms of
// polynomials with extension coefficients).
struct EPoly {
    std::vector<ExtElem> c;
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    void trim(const ExtField& E) {
        while (!c.empty() && E.is_zero(c.back())) c.pop_back();
    }
};

EPoly epoly_from_poly(const ExtField& E, const Poly& p);
EPoly epoly_constant(const ExtField& E, const ExtElem& a);
EPoly epoly_add(const ExtField& E, const EPoly& a, const EPoly& b);
EPoly epoly_sub(const ExtField& E, const EPoly& a, const EPoly& b);
EPoly epoly_mul(const ExtField& E, const EPoly& a, const EPoly& b);
EPoly epoly_scale(const ExtField& E, const EPoly& a, const ExtElem& s);
std::pair<EPoly, EPoly> epoly_divrem(const ExtField& E, const EPoly& a, const EPoly& b);
EPoly epoly_mod(const ExtField& E, const EPoly& a, const EPoly& b);
EPoly epoly_gcd(const ExtField& E, const EPoly& a, const EPoly& b); // monic
EPoly epoly_powmod(const ExtField& E, const EPoly& a, std::uint64_t e, const EPoly& m);
ExtElem epoly_eval(const ExtField& E, const EPoly& a, const ExtElem& x);

// All roots of a squarefree-or-not polynomial in the field, canonically
// sorted. Deterministic: the internal split RNG is fixed-seeded and the
// output is sorted.
std::vector<ExtElem> epoly_roots(const ExtField& E, const EPoly& f);

// Discrete log in the unit group: g^x = h with g of the given order.
// Pohlig-Hellman over the factorization of the order, BSGS per prime.
std::uint64_t ext_dlog(const ExtField& E, const ExtElem& g, const ExtElem& h,
                       std::uint64_t order);

} // namespace hasse
