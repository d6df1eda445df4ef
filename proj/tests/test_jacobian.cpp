#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

#include "hasse/jacobian.hpp"
#include "oracles.hpp"

using namespace hasse;

namespace {

Poly P(const Fq& F, const std::string& s) { return poly_parse(F, s); }
PrimePoly PP(const Fq& F, const std::string& s) { return PrimePoly(F, poly_parse(F, s)); }

// All reduced divisors of a genus-1 curve, by brute force.
std::vector<MumfordDivisor> all_reduced_genus1(const HyperCurve& C) {
    const Fq& F = C.field();
    std::vector<MumfordDivisor> out{MumfordDivisor{}};
    for (FqElem a = 0; a < F.q(); ++a) {
        const Poly u = Poly(std::vector<FqElem>{F.neg(a), 1});
        const FqElem da = poly_eval(F, C.rhs(), a);
        if (da == 0) {
            out.push_back(MumfordDivisor{u, Poly{}});
        } else if (F.is_square_unit(da)) {
            for (FqElem v = 1; v < F.q(); ++v)
                if (F.mul(v, v) == da) out.push_back(MumfordDivisor{u, Poly::constant(v)});
        }
    }
    return out;
}

} // namespace

TEST_CASE("point counts") {
    Fq F(3);
    const HyperCurve C(F, P(F, "T^3+2*T")); // T^3 - T vanishes on all of F_3
    CHECK(count_points(C, 1) == 4);

    const HyperCurve C2(F, P(F, "T^13+2*T+1"));
    for (unsigned k = 1; k <= 6; ++k) {
        const std::uint64_t n = count_points(C2, k);
        std::uint64_t qk = 1;
        for (unsigned i = 0; i < k; ++i) qk *= 3;
        const double bound = 2.0 * C2.genus() * std::pow(3.0, k / 2.0);
        CHECK(std::llabs(static_cast<long long>(n) - static_cast<long long>(qk + 1)) <=
              static_cast<long long>(bound) + 1);
    }
}

TEST_CASE("L-polynomial") {
    Fq F(3);
    // genus 0
    const HyperCurve C0(F, P(F, "T"));
    CHECK(l_polynomial(C0).h == 1);

    const HyperCurve C(F, P(F, "T^13+2*T+1"));
    const LPoly L = l_polynomial(C);
    CHECK(L.h == 3175);
    CHECK(L.h == Int(25) * 127);
    // functional equation, exact
    const unsigned g = C.genus();
    for (unsigned i = 0; i <= g; ++i) CHECK(L.c[2 * g - i] == int_pow(Int(3), g - i) * L.c[i]);
    CHECK(L.c[2 * g] == int_pow(Int(3), g));
}

TEST_CASE("cantor group law") {
    Fq F(3);
    const HyperCurve C(F, P(F, "T^5+2*T+1"));
    Rng rng(99);
    const MumfordDivisor id;
    for (int i = 0; i < 300; ++i) {
        const MumfordDivisor D = random_divisor(C, rng);
        CHECK(cantor_add(C, D, id) == D);
        CHECK(mumford_is_identity(cantor_add(C, D, mumford_neg(C, D))));
    }
    for (int i = 0; i < 2000; ++i) {
        const MumfordDivisor A = random_divisor(C, rng);
        const MumfordDivisor B = random_divisor(C, rng);
        const MumfordDivisor D = random_divisor(C, rng);
        CHECK(cantor_add(C, cantor_add(C, A, B), D) == cantor_add(C, A, cantor_add(C, B, D)));
        CHECK(cantor_add(C, A, B) == cantor_add(C, B, A));
    }
    CHECK_THROWS_AS(mumford_make(C, P(F, "T"), Poly{}), std::invalid_argument); // T does not divide v^2 - d
    CHECK_THROWS_AS(mumford_make(C, P(F, "2*T"), P(F, "1")), std::invalid_argument); // not monic
    CHECK_THROWS_AS(mumford_make(C, P(F, "T^3+T+2"), Poly{}), std::invalid_argument); // beyond genus
}

TEST_CASE("Lagrange: h kills random divisors") {
    Fq F(3);
    const HyperCurve C(F, P(F, "T^13+2*T+1"));
    const LPoly L = l_polynomial(C);
    Rng rng(7);
    for (int i = 0; i < 100; ++i)
        CHECK(mumford_is_identity(mumford_scalar(C, random_divisor(C, rng), L.h)));
}

TEST_CASE("group structure of the worked curve") {
    Fq F(3);
    const HyperCurve C(F, P(F, "T^13+2*T+1"));
    const Pic0Data G = group_structure(C);
    REQUIRE(G.structure.invariants.size() == 1);
    CHECK(G.structure.invariants[0] == 3175); // cyclic of order 5^2 * 127
    Int prod = 1;
    for (const auto& b : G.basis) {
        prod *= b.order;
        CHECK(mumford_is_identity(mumford_scalar(C, b.gen, b.order)));
    }
    CHECK(prod == G.L.h);
}

TEST_CASE("group structure matches exhaustive enumeration in genus 1") {
    Fq F(3);
    for (const std::string& model : {"T^3+2*T+1", "T^3+T^2+2", "T^3+2*T+2", "T^3+2*T"}) {
        const HyperCurve C(F, P(F, model));
        const auto all = all_reduced_genus1(C);
        const Pic0Data G = group_structure(C);
        CHECK(Int(all.size()) == G.L.h);
        // brute-force structure: multiset of element orders determines the
        // abelian group up to isomorphism at these sizes
        std::map<Int, int> order_count;
        for (const auto& D : all) {
            Int o = 1;
            MumfordDivisor cur = D;
            while (!mumford_is_identity(cur)) {
                cur = cantor_add(C, cur, D);
                ++o;
            }
            order_count[o]++;
        }
        // compare against the announced invariant factors
        std::map<Int, int> expected;
        std::vector<Int> inv = G.structure.invariants;
        std::vector<Int> elems{1};
        for (const Int& d : inv) {
            std::vector<Int> next;
            for (Int x = 0; x < d; ++x)
                for (const Int& prev : elems) {
                    // order of (x in Z/d, element of order prev)
                    Int ox = 1;
                    if (x != 0) ox = d / boost::multiprecision::gcd(x, d);
                    next.push_back(boost::multiprecision::lcm(ox, prev));
                }
            elems = std::move(next);
        }
        for (const Int& o : elems) expected[o]++;
        CHECK(order_count == expected);
    }
}

TEST_CASE("miller evaluation") {
    Fq F(3);
    const HyperCurve C(F, P(F, "T^13+2*T+1"));
    const PrimePoly p = PP(F, "T^6+2*T^4+T^2+2*T+2");
    const MillerContext ctx = make_miller_context(C, p);
    Rng rng(31);

    // empty relation evaluates to 1
    CHECK(miller_evaluate(C, ctx, {}) == ctx.E2.one());

    // [D] + [-D]: the function is u(x) up to constants; the normalized value
    // lies in the subfield F_p inside F_p^(2)
    for (int i = 0; i < 10; ++i) {
        const MumfordDivisor D = random_divisor(C, rng);
        const ExtElem v =
            miller_evaluate(C, ctx, {{D, 1}, {mumford_neg(C, D), 1}});
        CHECK_FALSE(ctx.E2.is_zero(v));
        CHECK(ctx.E2.frobenius(ctx.E2.pow(v, 1)) != v); // generic sanity: lives upstairs only if...
        // subfield membership: fixed by the q^s Frobenius
        ExtElem w = v;
        for (int j = 0; j < p.deg(); ++j) w = ctx.E2.frobenius(w);
        CHECK(w == v);
    }

    // bilinearity: with div(f_n) = n D - D_n, evaluating the doubled relation
    // squares the value: relation 2R where R = h (D) with h = order of [D]
    const Pic0Data G = group_structure(C);
    const MumfordDivisor D = G.basis[0].gen;
    const Int n = G.basis[0].order;
    const ExtElem v1 = miller_evaluate(C, ctx, {{D, static_cast<long long>(to_u64(n))}});
    const ExtElem v2 = miller_evaluate(C, ctx, {{D, static_cast<long long>(2 * to_u64(n))}});
    CHECK(v2 == ctx.E2.mul(v1, v1));

    // homomorphism on random principal pairs: e(R1 + R2) = e(R1) e(R2)
    Rng rng2(77);
    for (int i = 0; i < 5; ++i) {
        const MumfordDivisor A = random_divisor(C, rng2);
        const long long h64 = static_cast<long long>(to_u64(G.L.h));
        const ExtElem ea = miller_evaluate(C, ctx, {{A, h64}});
        const MumfordDivisor B = random_divisor(C, rng2);
        const ExtElem eb = miller_evaluate(C, ctx, {{B, h64}});
        const ExtElem eab = miller_evaluate(C, ctx, {{A, h64}, {B, h64}});
        CHECK(eab == ctx.E2.mul(ea, eb));
    }

    // non-principal input is rejected
    CHECK_THROWS_AS(miller_evaluate(C, ctx, {{D, 1}}), std::invalid_argument);
}

TEST_CASE("ray class group of the worked curve") {
    Fq F(3);
    const QuadExt K(F, P(F, "T^13+2*T+1"));
    const PrimePoly p = PP(F, "T^6+2*T^4+T^2+2*T+2");
    const RayClassData R = ray_class_structure(K, p);

    CHECK(R.kernel_order == 531440); // 3^12 - 1 = 2^4 * 5 * 7 * 13 * 73
    CHECK(R.cl_k.free_rank == 1);
    REQUIRE(R.cl_k.invariants.size() == 1);
    CHECK(R.cl_k.invariants[0] == 3175);

    CHECK(R.ray.free_rank == 1);
    REQUIRE(R.ray.invariants.size() == 1);
    // N = 2^4 * 5^3 * 7 * 13 * 73 * 127
    CHECK(R.ray.invariants[0] == Int(16) * 125 * 7 * 13 * 73 * 127);
    CHECK(R.ray.torsion_order() == R.kernel_order * 3175);

    // seed independence of the resulting structure
    const RayClassData R2 = ray_class_structure(K, p, 123456789);
    CHECK(R2.ray == R.ray);
}

TEST_CASE("degenerate ray class group: trivial class group") {
    Fq F(3);
    // y^2 = T^3 + 2T + 2 has a single rational point (at infinity): h = 1
    const QuadExt K(F, P(F, "T^3+2*T+2"));
    const HyperCurve C(F, P(F, "T^3+2*T+2"));
    CHECK(l_polynomial(C).h == 1);
    // find a small inert prime
    PrimePoly p = PP(F, "T");
    bool found = false;
    for (int d = 1; d <= 2 && !found; ++d)
        for (const Poly& w : list_monic_irreducibles(F, d)) {
            if (place_split_type(K, PrimePoly::unchecked(w)) == SplitType::Inert) {
                p = PrimePoly::unchecked(w);
                found = true;
                break;
            }
        }
    REQUIRE(found);
    const RayClassData R = ray_class_structure(K, p);
    REQUIRE(R.ray.invariants.size() == 1);
    std::uint64_t norm = 1;
    for (int i = 0; i < p.deg(); ++i) norm *= 3;
    CHECK(R.ray.invariants[0] == Int(norm) * norm - 1);
}

TEST_CASE("surjection criterion") {
    // Z/4 ->> Z/2 but not Z/2 x Z/2 ->> Z/4
    CHECK(can_surject(AbGroupStruct{0, {4}}, AbGroupStruct{0, {2}}));
    CHECK_FALSE(can_surject(AbGroupStruct{0, {2, 2}}, AbGroupStruct{0, {4}}));
    // identity and free ranks
    CHECK(can_surject(AbGroupStruct{2, {6}}, AbGroupStruct{2, {6}}));
    CHECK_FALSE(can_surject(AbGroupStruct{0, {100}}, AbGroupStruct{1, {}}));

    // the worked data: G = Z x Z/N, H = Z(2 5 7 13 73) x Z x Z/(5^2 127)
    const AbGroupStruct G{1, {Int(16) * 125 * 7 * 13 * 73 * 127}};
    const AbGroupStruct H =
        abelian_product(AbGroupStruct{0, {Int(2) * 5 * 7 * 13 * 73}}, AbGroupStruct{1, {Int(25) * 127}});
    CHECK_FALSE(can_surject(G, H)); // 5-ranks: 1 + 1 < 1 + 2
}

TEST_CASE("surjection criterion against hom enumeration") {
    Rng rng(2024);
    int checked = 0;
    while (checked < 1000) {
        // random small groups with at most 3 invariant factors, order <= 200
        auto sample = [&]() {
            std::vector<Int> inv;
            Int order = 1;
            const int k = 1 + static_cast<int>(rng.below(3));
            Int d = 1 + static_cast<int>(rng.below(6));
            for (int i = 0; i < k; ++i) {
                d *= 1 + static_cast<int>(rng.below(3));
                if (order * d > 200) break;
                if (d > 1) {
                    inv.push_back(d);
                    order *= d;
                }
            }
            return abelian_from_cyclic_orders(0, inv);
        };
        const AbGroupStruct G = sample(), H = sample();
        if (G.torsion_order() > 200 || H.torsion_order() > 200) continue;
        CHECK(can_surject(G, H) == oracle::surjection_exists_bruteforce(G, H));
        ++checked;
    }
    // reflexivity and transitivity spot checks
    for (int i = 0; i < 50; ++i) {
        const AbGroupStruct G = abelian_from_cyclic_orders(
            0, {Int(2 + static_cast<int>(rng.below(10))), Int(2 + static_cast<int>(rng.below(10)))});
        CHECK(can_surject(G, G));
    }
}

TEST_CASE("global obstruction on the worked data") {
    Fq F(3);
    const QuadExt K(F, P(F, "T^13+2*T+1"));
    const PrimePoly p = PP(F, "T^6+2*T^4+T^2+2*T+2");
    const GlobalObstruction O = check_global_obstruction(K, p);
    CHECK(O.obstructed);
    CHECK(O.z_order == Int(2) * 5 * 7 * 13 * 73);

    // a cyclic-over-cyclic degenerate configuration admits a surjection
    const QuadExt K2(F, P(F, "T^3+2*T+2"));
    PrimePoly p2 = PP(F, "T^2+1");
    REQUIRE(place_split_type(K2, p2) == SplitType::Inert);
    const GlobalObstruction O2 = check_global_obstruction(K2, p2);
    CHECK_FALSE(O2.obstructed);
}
