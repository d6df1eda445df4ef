// Acceptance suite: one criterion per section, each printing PASS/FAIL.
// Run with no arguments for all criteria, or with a single number 1..6.
#include <cstring>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "hasse/certificate.hpp"
#include "oracles.hpp"

using namespace hasse;

namespace {

int sub_failures = 0;

void sub(bool ok, const std::string& what) {
    std::cout << "    [" << (ok ? " ok " : "FAIL") << "] " << what << "\n";
    if (!ok) ++sub_failures;
}

Poly P(const Fq& F, const std::string& s) { return poly_parse(F, s); }
PrimePoly PP(const Fq& F, const std::string& s) { return PrimePoly(F, poly_parse(F, s)); }

// ---------------------------------------------------------------------------
// 1. Class-group reproduction: factorization of (3^12-1)/(3^2-1), Pic^0 and
//    ray class structure of y^2 = T^13+2T+1 over F_3, and the obstruction.
// ---------------------------------------------------------------------------
bool criterion1() {
    Fq F(3);
    const auto fac = factor_integer((int_pow(Int(3), 12) - 1) / 8);
    const std::map<std::uint64_t, unsigned> expect{{2, 1}, {5, 1}, {7, 1}, {13, 1}, {73, 1}};
    sub(fac == expect, "(3^12-1)/(3^2-1) = 2 * 5 * 7 * 13 * 73");

    const QuadExt K(F, P(F, "T^13+2*T+1"));
    const PrimePoly p = PP(F, "T^6+2*T^4+T^2+2*T+2");
    const RayClassData R = ray_class_structure(K, p);
    sub(R.pic0.L.h == Int(25) * 127, "class number h = 5^2 * 127");
    sub(R.pic0.structure.invariants == std::vector<Int>{Int(3175)}, "Pic^0 cyclic of order 3175");
    sub(R.ray.invariants == std::vector<Int>{Int(16) * 125 * 7 * 13 * 73 * 127},
        "ray class torsion cyclic of order 2^4 5^3 7 13 73 127");

    const GlobalObstruction O = check_global_obstruction(K, p);
    sub(!can_surject(R.ray, O.target), "no surjection onto Z((|p|^2-1)/(q^2-1)) x Cl_K");
    sub(O.obstructed, "global obstruction holds");
    return sub_failures == 0;
}

// ---------------------------------------------------------------------------
// 2. Congruence set membership at q = 3.
// ---------------------------------------------------------------------------
bool criterion2() {
    Fq F(3);
    const PrimePoly y = PP(F, "T");
    const auto p2 = prime_set(F, d_set(F, y, 2));
    const auto p3 = prime_set(F, d_set(F, y, 3));
    sub(!sorted_contains(p2, P(F, "T^2+T+2")), "T^2+T+2 not in P(T, 2)");
    sub(!sorted_contains(p2, P(F, "T^2+2*T+2")), "T^2+2T+2 not in P(T, 2)");
    sub(!sorted_contains(p3, P(F, "T^3+T^2+2")), "T^3+T^2+2 not in P(T, 3)");
    sub(!sorted_contains(p3, P(F, "T^3+2*T^2+1")), "T^3+2T^2+1 not in P(T, 3)");

    const auto pp2 = prime_set(F, dprime_set(F, y, 2));
    sub(sorted_contains(pp2, P(F, "T^2+T+2")), "T^2+T+2 in P'(T, 2)");
    sub(sorted_contains(pp2, P(F, "T^2+2*T+2")), "T^2+2T+2 in P'(T, 2)");

    const auto pp3 = prime_set(F, dprime_set(F, y, 3));
    sub(!sorted_contains(pp3, P(F, "T^3+T^2+2")), "T^3+T^2+2 not in P'(T, 3)");
    sub(!sorted_contains(pp3, P(F, "T^3+2*T^2+1")), "T^3+2T^2+1 not in P'(T, 3)");
    return sub_failures == 0;
}

// ---------------------------------------------------------------------------
// 3. The ten q = 5 cubics avoid P(T, 3).
// ---------------------------------------------------------------------------
bool criterion3() {
    Fq F(5);
    const PrimePoly y = PP(F, "T");
    const auto p3 = prime_set(F, d_set(F, y, 3));
    const char* cubics[] = {
        "T^3+2*T+4",       "T^3+3*T+3",       "T^3+T^2+T+4",     "T^3+T^2+3*T+1",
        "T^3+2*T^2+T+3",   "T^3+2*T^2+2*T+3", "T^3+3*T^2+2*T+3", "T^3+3*T^2+4*T+3",
        "T^3+4*T^2+T+1",   "T^3+4*T^2+3*T+4",
    };
    for (const char* c : cubics) sub(!sorted_contains(p3, P(F, c)), std::string(c) + " not in P(T, 3)");
    return sub_failures == 0;
}

// ---------------------------------------------------------------------------
// 4. Genus formula values.
// ---------------------------------------------------------------------------
bool criterion4() {
    Fq F3(3);
    sub(genus_xd(F3, PP(F3, "T^6+2*T^4+T^2+2*T+2"), PP(F3, "T^2+T+2")) == 729, "genus 729");
    sub(genus_xd(F3, PP(F3, "T^2+T+2"), PP(F3, "T^2+1")) == 9, "genus 9");
    Fq F5(5);
    sub(genus_xd(F5, PP(F5, "T^3+2*T+4"), PP(F5, "T+2")) == 20, "genus 20");
    return sub_failures == 0;
}

// ---------------------------------------------------------------------------
// 5. End to end: the two introductory violations, the twist sweeps against
//    the published m-lists, and the locally-failing configuration.
// ---------------------------------------------------------------------------
bool criterion5() {
    Fq F3(3);
    {
        const PrimePoly p = PP(F3, "T^2+T+2"), qp = PP(F3, "T^2+1");
        const Poly d = poly_mul(F3, P(F3, "T"), poly_mul(F3, p.poly(), qp.poly()));
        const HasseCertificate c = check_violation(F3, p, qp, d, Route::Main2, P(F3, "T"));
        sub(c.verdict == Verdict::Violation, "introductory example (a) is a violation");
        sub(verify_certificate(certificate_to_json(F3, c)).ok, "certificate (a) re-verifies");
    }
    {
        const PrimePoly p = PP(F3, "T^6+2*T^4+T^2+2*T+2"), qp = PP(F3, "T^2+T+2");
        const HasseCertificate c =
            check_violation(F3, p, qp, P(F3, "T^13+2*T+1"), Route::GlobalClass);
        sub(c.verdict == Verdict::Violation, "introductory example (b) is a violation");
        sub(verify_certificate(certificate_to_json(F3, c)).ok, "certificate (b) re-verifies");
    }

    // The twist sweeps. The 17-element reference list (both p choices, m = p
    // excluded per run) and the 8-element reference list must be reproduced
    // as violations; the strict set-equality subchecks are also run and
    // reported honestly. The exhaustive sweep finds strictly more violating m
    // (each certificate carries independently recomputable witnesses), so the
    // reference lists are proper subsets and those subchecks fail by design;
    // see README for the analysis.
    const std::set<std::string> paper17{
        "1",           "T+1",         "T+2",           "T^2+T+2",       "T^2+2*T+2",
        "T^3+T^2+2",   "T^3+2*T^2+1", "T^3+2*T+1",     "T^3+2*T+2",     "T^3+T^2+2*T+1",
        "T^3+T^2+T+2", "T^4+T+2",     "T^4+2*T+2",     "T^4+T^2+2",     "T^4+2*T^2+2",
        "T^4+T^2+T+1", "T^4+T^2+2*T+1"};
    std::set<std::string> seen_union;
    for (const char* pstr : {"T^2+T+2", "T^2+2*T+2"}) {
        const PrimePoly p = PP(F3, pstr), qp = PP(F3, "T^2+1");
        const SearchResult r = search_m(F3, p, qp, PP(F3, "T"), 4);
        std::set<std::string> got;
        for (const auto& m : r.violating_m) got.insert(poly_to_string(F3, m));
        seen_union.insert(got.begin(), got.end());
        bool contains_all = true;
        for (const auto& m : paper17)
            if (m != pstr && !got.count(m)) contains_all = false;
        sub(contains_all, std::string("sweep p=") + pstr + ": reference list reproduced as violations");
        sub(!got.count(pstr), std::string("sweep p=") + pstr + ": m = p excluded");
        std::set<std::string> expect_eq = paper17;
        expect_eq.erase(pstr);
        sub(got == expect_eq,
            std::string("sweep p=") + pstr +
                ": strict equality with the reference list (a proper subset; see README)");
        for (const auto& e : r.violations) {
            if (!verify_certificate(certificate_to_json(F3, e.cert)).ok) {
                sub(false, "sweep certificate fails verification");
                break;
            }
        }
    }
    sub(std::includes(seen_union.begin(), seen_union.end(), paper17.begin(), paper17.end()),
        "union over both p choices contains the full 17-element reference list");

    {
        Fq F5(5);
        const std::set<std::string> paper8{"1",     "T+1",   "T+3",     "T+4",
                                           "T^2+2", "T^2+3", "T^2+T+1", "T^2+T+2"};
        const SearchResult r = search_m(F5, PP(F5, "T^3+2*T+4"), PP(F5, "T+2"), PP(F5, "T"), 2);
        std::set<std::string> got;
        for (const auto& m : r.violating_m) got.insert(poly_to_string(F5, m));
        bool contains_all = true;
        for (const auto& m : paper8)
            if (!got.count(m)) contains_all = false;
        sub(contains_all, "q=5 sweep: 8-element reference list reproduced as violations");
        sub(got == paper8, "q=5 sweep: strict equality with the reference list (a proper subset; see README)");
    }

    {
        const PrimePoly p = PP(F3, "T^3+T^2+2"), qp = PP(F3, "T^2+1");
        const Poly d =
            poly_scale(F3, poly_mul(F3, P(F3, "T"), poly_mul(F3, p.poly(), qp.poly())), 2);
        const HasseCertificate c = check_violation(F3, p, qp, d, Route::Main2, P(F3, "T"));
        sub(c.verdict == Verdict::NoViolation, "locally failing configuration is not a violation");
        bool empty_at_q = false;
        if (c.local)
            for (const auto& v : c.local->ramified_d)
                if (!v.place.at_infinity && v.place.prime == qp.poly() && !v.nonempty)
                    empty_at_q = true;
        sub(empty_at_q, "the failure is witnessed at the place over T^2+1");
    }
    return sub_failures == 0;
}

// ---------------------------------------------------------------------------
// 6. Property suites (>= 10^3 random cases unless exhaustive).
// ---------------------------------------------------------------------------
bool criterion6() {
    // reciprocity, exhaustive for degrees <= 3 and q in {3, 5}
    {
        bool all = true;
        int pairs = 0;
        for (std::uint32_t q : {3u, 5u}) {
            Fq F(q);
            std::vector<PrimePoly> primes;
            for (int d = 1; d <= 3; ++d)
                for (const Poly& w : list_monic_irreducibles(F, d))
                    primes.push_back(PrimePoly::unchecked(w));
            for (std::size_t i = 0; i < primes.size(); ++i)
                for (std::size_t j = i + 1; j < primes.size(); ++j, ++pairs)
                    all = all && reciprocity_check(F, primes[i], primes[j]);
        }
        std::ostringstream os;
        os << "reciprocity exhaustive on " << pairs << " pairs";
        sub(all, os.str());
    }

    // Cantor group law: identities and associativity on 10^4 random triples
    {
        Fq F(3);
        const HyperCurve C(F, P(F, "T^5+2*T+1"));
        Rng rng(2718);
        bool ok = true;
        for (int i = 0; i < 10000 && ok; ++i) {
            const MumfordDivisor A = random_divisor(C, rng);
            const MumfordDivisor B = random_divisor(C, rng);
            const MumfordDivisor D = random_divisor(C, rng);
            ok = ok && cantor_add(C, A, mumford_neg(C, A)).u.is_one();
            ok = ok && cantor_add(C, A, MumfordDivisor{}) == A;
            ok = ok && cantor_add(C, cantor_add(C, A, B), D) == cantor_add(C, A, cantor_add(C, B, D));
        }
        sub(ok, "Cantor identities and associativity on 10^4 random triples");
    }

    // L-polynomial functional equation and the Lagrange check
    {
        Fq F(3);
        bool ok = true;
        for (const std::string& model :
             {std::string("T^13+2*T+1"), std::string("T^5+2*T+1"), std::string("T^3+2*T+2")}) {
            const HyperCurve C(F, P(F, model));
            const LPoly L = l_polynomial(C);
            const unsigned g = C.genus();
            for (unsigned i = 0; i <= g; ++i)
                ok = ok && L.c[2 * g - i] == int_pow(Int(3), g - i) * L.c[i];
            Rng rng(5);
            for (int i = 0; i < 100; ++i)
                ok = ok && mumford_is_identity(mumford_scalar(C, random_divisor(C, rng), L.h));
        }
        sub(ok, "functional equation and h-Lagrange check on three curves");
    }

    // power sums against the companion matrix, >= 10^3 cases
    {
        Fq F(3);
        bool ok = true;
        int cases = 0;
        Rng rng(13);
        for (int dy = 1; dy <= 2; ++dy) {
            for (const Poly& yp : list_monic_irreducibles(F, dy)) {
                const PrimePoly y = PrimePoly::unchecked(yp);
                const auto data = enumerate_weil(F, y);
                for (const auto& w : data) {
                    for (int rep = 0; rep < 30; ++rep, ++cases) {
                        const std::uint64_t r = rng.below(64);
                        auto Cm = oracle::companion(w.t, poly_scale(F, yp, w.mu), F);
                        ok = ok && power_sum(F, w, y, r) ==
                                       oracle::mat2_trace(F, oracle::mat2_pow(F, Cm, r));
                    }
                }
            }
        }
        std::ostringstream os;
        os << "power sums vs companion matrix on " << cases << " cases";
        sub(ok && cases >= 1000, os.str());
    }

    // Weil datum enumeration vs the direct condition oracle, exhaustive
    {
        bool ok = true;
        for (std::uint32_t q : {3u, 5u}) {
            Fq F(q);
            for (int dy = 1; dy <= 2; ++dy) {
                for (const Poly& yp : list_monic_irreducibles(F, dy)) {
                    const PrimePoly y = PrimePoly::unchecked(yp);
                    const auto fast = enumerate_weil(F, y);
                    std::set<std::pair<std::vector<FqElem>, FqElem>> fast_set;
                    for (const auto& w : fast) fast_set.insert({w.t.c, w.mu});
                    std::uint64_t count = 1;
                    for (int i = 0; i <= dy; ++i) count *= q;
                    std::uint64_t oracle_n = 0;
                    for (std::uint64_t idx = 0; idx < count; ++idx) {
                        Poly t;
                        t.c.assign(static_cast<std::size_t>(dy) + 1, 0);
                        std::uint64_t rest = idx;
                        for (int i = 0; i <= dy; ++i) {
                            t.c[static_cast<std::size_t>(i)] = static_cast<FqElem>(rest % q);
                            rest /= q;
                        }
                        t.trim();
                        for (FqElem mu : F.units()) {
                            const bool expected = oracle::weil_conditions_direct(F, t, mu, yp);
                            if (expected) ++oracle_n;
                            ok = ok && expected == (fast_set.count({t.c, mu}) == 1);
                        }
                    }
                    ok = ok && oracle_n == fast.size();
                }
            }
        }
        sub(ok, "Weil datum enumeration vs Newton-polygon oracle, exhaustive deg y <= 2, q in {3,5}");
    }

    // surjection criterion vs brute force, >= 10^3 random cases
    {
        Rng rng(424242);
        bool ok = true;
        int checked = 0;
        while (checked < 1000) {
            auto sample = [&]() {
                std::vector<Int> inv;
                const int k = 1 + static_cast<int>(rng.below(3));
                Int d = 1;
                for (int i = 0; i < k; ++i) {
                    d *= 1 + static_cast<int>(rng.below(5));
                    if (d > 1) inv.push_back(d);
                }
                return abelian_from_cyclic_orders(0, inv);
            };
            const AbGroupStruct G = sample(), H = sample();
            if (G.torsion_order() > 200 || H.torsion_order() > 200) continue;
            ok = ok && can_surject(G, H) == oracle::surjection_exists_bruteforce(G, H);
            ++checked;
        }
        sub(ok, "surjection criterion vs hom-enumeration oracle on 1000 groups");
    }

    // Miller evaluation is a homomorphism on principal relations
    {
        Fq F(3);
        const HyperCurve C(F, P(F, "T^13+2*T+1"));
        const PrimePoly p = PP(F, "T^6+2*T^4+T^2+2*T+2");
        const MillerContext ctx = make_miller_context(C, p);
        const long long h = 3175;
        Rng rng(99);
        bool ok = true;
        for (int i = 0; i < 1000; ++i) {
            const MumfordDivisor A = random_divisor(C, rng);
            const MumfordDivisor B = random_divisor(C, rng);
            const ExtElem ea = miller_evaluate(C, ctx, {{A, h}});
            const ExtElem eb = miller_evaluate(C, ctx, {{B, h}});
            const ExtElem eab = miller_evaluate(C, ctx, {{A, h}, {B, h}});
            ok = ok && eab == ctx.E2.mul(ea, eb);
        }
        sub(ok, "Miller evaluation homomorphism on 1000 principal pairs");
    }

    // certificate round-trip determinism
    {
        Fq F(3);
        const PrimePoly p = PP(F, "T^2+T+2"), qp = PP(F, "T^2+1");
        const Poly d = poly_mul(F, P(F, "T"), poly_mul(F, p.poly(), qp.poly()));
        CheckOptions o1, o2;
        o1.threads = 1;
        o2.threads = 2;
        o2.seed = 987654321;
        const std::string j1 = certificate_to_json(F, check_violation(F, p, qp, d, Route::Main2, P(F, "T"), o1));
        std::string j2 = certificate_to_json(F, check_violation(F, p, qp, d, Route::Main2, P(F, "T"), o2));
        // seeds are recorded in the inputs block; outputs must agree otherwise
        const HasseCertificate c2 = certificate_from_json(j2);
        HasseCertificate c2n = c2;
        c2n.seed = o1.seed;
        j2 = certificate_to_json(F, c2n);
        sub(j1 == j2, "certificates agree across seeds and thread counts");
        const std::string round = certificate_to_json(F, certificate_from_json(j1));
        sub(round == j1, "serialize-parse-serialize is the identity");
    }
    return sub_failures == 0;
}

} // namespace

int main(int argc, char** argv) {
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    struct Entry {
        int num;
        const char* name;
        bool (*fn)();
    };
    const Entry entries[] = {
        {1, "class-group reproduction (worked example)", criterion1},
        {2, "congruence membership at q = 3", criterion2},
        {3, "congruence membership at q = 5", criterion3},
        {4, "genus formula", criterion4},
        {5, "end-to-end certification and twist sweeps", criterion5},
        {6, "property suites", criterion6},
    };
    int failures = 0;
    for (const auto& e : entries) {
        if (only && e.num != only) continue;
        sub_failures = 0;
        bool ok = false;
        try {
            ok = e.fn();
        } catch (const std::exception& ex) {
            std::cout << "    [FAIL] exception: " << ex.what() << "\n";
            ok = false;
        }
        std::cout << "criterion " << e.num << ": " << (ok ? "PASS" : "FAIL") << " - " << e.name
                  << "\n";
        if (!ok) ++failures;
    }
    return failures;
}
