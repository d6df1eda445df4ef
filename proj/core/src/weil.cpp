#include "hasse/weil.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

#include "hasse/extfield.hpp"

namespace hasse {

std::uint64_t weil_m(const Fq& F) {
    return 2ull * (static_cast<std::uint64_t>(F.q()) * F.q() - 1);
}

std::uint64_t weil_nprime(const Fq& F, unsigned s) {
    std::uint64_t qs = 1;
    for (unsigned i = 0; i < s; ++i) {
        if (qs > (1ull << 40)) throw std::overflow_error("weil_nprime: s too large");
        qs *= F.q();
    }
    return 2ull * (qs + 1) * (static_cast<std::uint64_t>(F.q()) * F.q() - 1);
}

namespace {

bool nonsquare_at_infinity(const Fq& F, const Poly& a) {
    // a is a square in F_q((1/T)) iff a != 0, deg a even, lc a square.
    if (a.is_zero()) return false;
    if (a.deg() % 2 != 0) return true;
    return !F.is_square_unit(a.lc());
}

} // namespace

std::vector<WeilDatum> enumerate_weil(const Fq& F, const PrimePoly& y) {
    if (!F.odd()) throw std::domain_error("enumerate_weil: requires odd q");
    const int tmax = y.deg() / 2; // deg t <= deg(y)/2
    std::vector<WeilDatum> out;
    std::uint64_t count = 1;
    for (int i = 0; i <= tmax; ++i) count *= F.q();
    const Poly four_y = poly_scale(F, y.poly(), F.reduce(4));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly t;
        std::uint64_t rest = idx;
        t.c.assign(static_cast<std::size_t>(tmax) + 1, 0);
        for (int i = tmax; i >= 0; --i) {
            t.c[static_cast<std::size_t>(i)] = static_cast<FqElem>(rest % F.q());
            rest /= F.q();
        }
        t.trim();
        const Poly t2 = poly_mul(F, t, t);
        for (FqElem mu : F.units()) {
            const Poly disc = poly_sub(F, t2, poly_scale(F, four_y, mu));
            if (nonsquare_at_infinity(F, disc)) out.push_back(WeilDatum{t, mu});
        }
    }
    std::sort(out.begin(), out.end(), [](const WeilDatum& a, const WeilDatum& b) {
        const int c = poly_cmp(a.t, b.t);
        return c != 0 ? c < 0 : a.mu < b.mu;
    });
    return out;
}

Poly power_sum(const Fq& F, const WeilDatum& w, const PrimePoly& y, std::uint64_t r) {
    Poly prev = Poly::constant(2); // s_0
    if (r == 0) return prev;
    Poly cur = w.t; // s_1
    const Poly b = poly_scale(F, y.poly(), w.mu);
    for (std::uint64_t k = 2; k <= r; ++k) {
        Poly next = poly_sub(F, poly_mul(F, w.t, cur), poly_mul(F, b, prev));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

std::vector<Poly> sorted_unique(std::vector<Poly> v) {
    std::sort(v.begin(), v.end(), PolyLess{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

std::vector<Poly> c_set(const Fq& F, const PrimePoly& y) {
    const std::uint64_t dm = 2 * weil_m(F);
    std::vector<Poly> out;
    for (const WeilDatum& w : enumerate_weil(F, y)) out.push_back(power_sum(F, w, y, dm));
    return sorted_unique(std::move(out));
}

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) { std::uint64_t t = a % b; a = b; b = t; }
    return a;
}

std::vector<Poly> d_set_impl(const Fq& F, const PrimePoly& y, unsigned s, bool primitive_only) {
    if (s < 1) throw std::invalid_argument("d_set: s must be >= 1");
    const std::uint64_t m = weil_m(F);
    const ExtField E(F, 2 * s);
    std::uint64_t qs = 1;
    for (unsigned i = 0; i < s; ++i) qs *= F.q();

    // Norm-one subgroup of F_{q^{2s}}^x: powers of g^(q^s - 1).
    const ExtElem g = E.unit_group_generator();
    const ExtElem eps0 = E.pow(g, qs - 1);
    // Trace values eps + eps^{-1}, deduplicated by Frobenius orbit: the norm
    // below is invariant under xi -> xi^q.
    std::set<std::vector<FqElem>> orbit_reps;
    std::vector<ExtElem> xis;
    ExtElem eps = E.one();
    for (std::uint64_t j = 0; j <= qs; ++j, eps = E.mul(eps, eps0)) {
        if (primitive_only && gcd_u64(j, qs + 1) != 1) continue;
        const ExtElem xi = E.add(eps, E.inv(eps));
        ExtElem best = xi, cur = xi;
        for (unsigned i = 1; i < 2 * s; ++i) {
            cur = E.frobenius(cur);
            if (poly_cmp(cur.rep, best.rep) < 0) best = cur;
        }
        if (orbit_reps.insert(best.rep.c).second) xis.push_back(best);
    }

    const Poly ym = poly_pow(F, y.poly(), m);
    const EPoly ym_e = epoly_from_poly(E, ym);
    std::vector<Poly> out;
    for (const Poly& c : c_set(F, y)) {
        const EPoly c_e = epoly_from_poly(E, c);
        for (const ExtElem& xi : xis) {
            EPoly prod;
            prod.c = {E.one()};
            ExtElem conj = xi;
            for (unsigned i = 0; i < s; ++i) {
                const EPoly factor = epoly_sub(E, c_e, epoly_scale(E, ym_e, conj));
                prod = epoly_mul(E, prod, factor);
                conj = E.frobenius(conj);
            }
            Poly down;
            down.c.resize(prod.c.size());
            for (std::size_t i = 0; i < prod.c.size(); ++i) down.c[i] = E.to_fq(prod.c[i]);
            down.trim();
            out.push_back(std::move(down));
        }
    }
    return sorted_unique(std::move(out));
}

} // namespace

std::vector<Poly> d_set(const Fq& F, const PrimePoly& y, unsigned s) {
    return d_set_impl(F, y, s, true);
}

std::vector<Poly> d_set_full(const Fq& F, const PrimePoly& y, unsigned s) {
    return d_set_impl(F, y, s, false);
}

namespace {

// Element a X + b of A[X]/(X^2 - t X + mu y).
struct QuadElem {
    Poly a, b;
};

QuadElem quad_mul(const Fq& F, const QuadElem& x, const QuadElem& y2, const Poly& t, const Poly& b0) {
    // (a1 X + b1)(a2 X + b2) with X^2 = t X - b0.
    const Poly aa = poly_mul(F, x.a, y2.a);
    Poly xc = poly_add(F, poly_mul(F, x.a, y2.b), poly_mul(F, x.b, y2.a));
    xc = poly_add(F, xc, poly_mul(F, aa, t));
    const Poly cc = poly_sub(F, poly_mul(F, x.b, y2.b), poly_mul(F, aa, b0));
    return QuadElem{xc, cc};
}

} // namespace

std::vector<Poly> dprime_set(const Fq& F, const PrimePoly& y, unsigned s) {
    if (s < 1) throw std::invalid_argument("dprime_set: s must be >= 1");
    const std::uint64_t nprime = weil_nprime(F, s);
    std::vector<Poly> out;
    for (const WeilDatum& w : enumerate_weil(F, y)) {
        const Poly b0 = poly_scale(F, y.poly(), w.mu);
        // X^(2 n') mod X^2 - t X + mu y by square and multiply.
        QuadElem acc{Poly{}, Poly::constant(1)};
        QuadElem base{Poly::constant(1), Poly{}};
        std::uint64_t e = 2 * nprime;
        while (e) {
            if (e & 1) acc = quad_mul(F, acc, base, w.t, b0);
            base = quad_mul(F, base, base, w.t, b0);
            e >>= 1;
        }
        // g(pi) = pi^(2n') - y^(n'); Nr(g) = a^2 mu y + a b t + b^2 for g = a X + b.
        const Poly yn = poly_pow(F, y.poly(), nprime);
        const Poly gb = poly_sub(F, acc.b, yn);
        Poly norm = poly_mul(F, poly_mul(F, acc.a, acc.a), b0);
        norm = poly_add(F, norm, poly_mul(F, poly_mul(F, acc.a, gb), w.t));
        norm = poly_add(F, norm, poly_mul(F, gb, gb));
        out.push_back(std::move(norm));
    }
    return sorted_unique(std::move(out));
}

std::vector<Poly> prime_set(const Fq& F, const std::vector<Poly>& values, std::uint64_t seed) {
    std::vector<Poly> out;
    for (const Poly& v : values) {
        if (v.is_zero()) continue;
        if (v.deg() < 1) continue;
        for (const auto& fac : factorize(F, v, seed).factors) out.push_back(fac.prime);
    }
    return sorted_unique(std::move(out));
}

bool sorted_contains(const std::vector<Poly>& sorted, const Poly& p) {
    return std::binary_search(sorted.begin(), sorted.end(), p, PolyLess{});
}

std::vector<Poly> cached_congruence_prime_set(const Fq& F, const PrimePoly& y, unsigned s,
                                              bool prime_variant, std::uint64_t seed) {
    static std::mutex mu;
    using Key = std::tuple<std::uint32_t, std::vector<FqElem>, unsigned, bool, std::uint64_t>;
    static std::map<Key, std::unique_ptr<std::vector<Poly>>> cache;
    const Key key{F.q(), y.poly().c, s, prime_variant, seed};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto fresh = std::make_unique<std::vector<Poly>>(
        prime_variant ? prime_set(F, dprime_set(F, y, s), seed)
                      : prime_set(F, d_set(F, y, s), seed));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(key, std::move(fresh));
    return *it->second;
}

namespace {

CongruenceVerdict check_thm_main(const Fq& F, const PrimePoly& p, const PrimePoly& qp,
                                 const PrimePoly& y, const QuadExt& K, bool prime_variant,
                                 std::uint64_t seed) {
    if (p == qp) throw std::invalid_argument("congruence check: ramified primes must be distinct");
    const QuaternionD D(p, qp);
    CongruenceVerdict v;
    v.s = static_cast<unsigned>(p.deg());

    const bool splits = quaternion_split_by(F, D, K);
    v.bullets.push_back({"K_splits_D", splits, ""});

    const bool y_ram = place_split_type(K, y) == SplitType::Ramified;
    v.bullets.push_back({"y_ramified_in_K", y_ram, poly_to_string(F, y.poly())});

    const bool y_unramified_in_D = !(y == p) && !(y == qp);
    v.bullets.push_back({"y_outside_ram_D", y_unramified_in_D, ""});

    bool p_absent = false;
    if (y_unramified_in_D) {
        v.prime_set_used = cached_congruence_prime_set(F, y, v.s, prime_variant, seed);
        p_absent = !sorted_contains(v.prime_set_used, p.poly());
    }
    v.bullets.push_back({prime_variant ? "p_absent_from_Pprime" : "p_absent_from_P", p_absent, ""});

    // For every unit mu, F(sqrt(mu y)) must fail to split D, i.e. some
    // ramified prime of D splits there.
    bool all_mu = true;
    std::string mu_detail;
    for (FqElem mu : F.units()) {
        const QuadExt Kmu(F, poly_scale(F, y.poly(), mu));
        const bool fails_to_split = !quaternion_split_by(F, D, Kmu);
        if (!fails_to_split) {
            all_mu = false;
            mu_detail = "mu=" + std::to_string(mu) + " splits D";
            break;
        }
    }
    v.bullets.push_back({"no_mu_y_twist_splits_D", all_mu, mu_detail});

    bool all = true;
    for (const auto& b : v.bullets) all = all && b.ok;
    v.outcome = all ? GlobalOutcome::Obstructed : GlobalOutcome::Inconclusive;
    return v;
}

} // namespace

CongruenceVerdict check_thm_main2(const Fq& F, const PrimePoly& p, const PrimePoly& qp,
                                  const PrimePoly& y, const QuadExt& K, std::uint64_t seed) {
    return check_thm_main(F, p, qp, y, K, false, seed);
}

CongruenceVerdict check_thm_main1(const Fq& F, const PrimePoly& p, const PrimePoly& qp,
                                  const PrimePoly& y, const QuadExt& K, std::uint64_t seed) {
    return check_thm_main(F, p, qp, y, K, true, seed);
}

} // namespace hasse
