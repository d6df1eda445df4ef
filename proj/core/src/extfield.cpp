#include "hasse/extfield.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "hasse/factor.hpp"

namespace hasse {

ExtField::ExtField(const Fq& F, unsigned n) : F_(F), n_(n) {
    if (n == 0) throw std::invalid_argument("ExtField: degree must be >= 1");
    card_ = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (card_ > (1ull << 62) / F.q())
            throw std::overflow_error("ExtField: field too large for this build");
        card_ *= F.q();
    }
    Poly found;
    for_each_monic_irreducible(F_, static_cast<int>(n), [&](const Poly& p) {
        found = p;
        return false;
    });
    mod_ = found;
}

ExtField::ExtField(const Fq& F, Poly w, ExplicitModulus) : F_(F) {
    if (!w.is_monic() || !is_irreducible(F, w))
        throw std::invalid_argument("ExtField: modulus must be monic irreducible");
    n_ = static_cast<unsigned>(w.deg());
    card_ = 1;
    for (unsigned i = 0; i < n_; ++i) {
        if (card_ > (1ull << 62) / F.q())
            throw std::overflow_error("ExtField: field too large for this build");
        card_ *= F.q();
    }
    mod_ = std::move(w);
}

ExtField ExtField::with_modulus(const Fq& F, Poly w) {
    return ExtField(F, std::move(w), ExplicitModulus{});
}

ExtElem ExtField::from_index(std::uint64_t index) const {
    Poly p;
    p.c.assign(n_, 0);
    for (unsigned i = 0; i < n_; ++i) {
        p.c[i] = static_cast<FqElem>(index % F_.q());
        index /= F_.q();
    }
    p.trim();
    return ExtElem{p};
}

ExtElem ExtField::inv(const ExtElem& a) const {
    if (is_zero(a)) throw std::domain_error("ExtField: inverse of zero");
    Poly s, t;
    Poly g = poly_ext_gcd(F_, a.rep, mod_, s, t);
    if (!g.is_one()) throw std::logic_error("ExtField: modulus not irreducible");
    return ExtElem{poly_mod(F_, s, mod_)};
}

ExtElem ExtField::pow(const ExtElem& a, std::uint64_t e) const {
    if (is_zero(a)) return e == 0 ? one() : zero();
    ExtElem base = a;
    ExtElem r = one();
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

void ExtField::check_subfield(unsigned m) const {
    if (m == 0 || n_ % m != 0)
        throw std::invalid_argument("ExtField: target degree does not divide field degree");
}

ExtElem ExtField::norm_to_subfield(const ExtElem& x, unsigned m) const {
    check_subfield(m);
    std::uint64_t qm = 1;
    for (unsigned i = 0; i < m; ++i) qm *= F_.q();
    return pow(x, unit_order() / (qm - 1));
}

ExtElem ExtField::trace_to_subfield(const ExtElem& x, unsigned m) const {
    check_subfield(m);
    ExtElem acc = zero();
    ExtElem cur = x;
    for (unsigned i = 0; i < n_ / m; ++i) {
        acc = add(acc, cur);
        for (unsigned j = 0; j < m; ++j) cur = frobenius(cur);
    }
    return acc;
}

bool ExtField::is_square(const ExtElem& x) const {
    if (is_zero(x)) throw std::domain_error("ExtField: quadratic character of zero");
    if (!F_.odd()) return true;
    return pow(x, unit_order() / 2) == one();
}

ExtElem ExtField::sqrt(const ExtElem& x) const {
    if (!F_.odd()) throw std::domain_error("ExtField: sqrt requires odd q");
    if (is_zero(x)) return zero();
    if (!is_square(x)) throw std::domain_error("ExtField: sqrt of a non-square");
    const std::uint64_t m = unit_order();
    std::uint64_t t = m;
    unsigned s = 0;
    while ((t & 1) == 0) { t >>= 1; ++s; }
    ExtElem r = pow(x, (t + 1) / 2);
    if (s > 1) {
        // Non-square for the Tonelli-Shanks ladder, by canonical scan.
        ExtElem z = zero();
        for (std::uint64_t i = 1; i < card(); ++i) {
            ExtElem cand = from_index(i);
            if (!is_square(cand)) { z = cand; break; }
        }
        ExtElem c = pow(z, t);
        ExtElem u = pow(x, t);
        unsigned k = s;
        while (!(u == one())) {
            unsigned i = 0;
            ExtElem probe = u;
            while (!(probe == one())) { probe = mul(probe, probe); ++i; }
            ExtElem b = c;
            for (unsigned j = 0; j + i + 1 < k; ++j) b = mul(b, b);
            r = mul(r, b);
            c = mul(b, b);
            u = mul(u, c);
            k = i;
        }
    }
    ExtElem other = neg(r);
    return poly_cmp(r.rep, other.rep) <= 0 ? r : other;
}

FqElem ExtField::to_fq(const ExtElem& x) const {
    if (x.rep.deg() > 0) throw std::domain_error("ExtField: element not in the prime field");
    return x.rep.coeff(0);
}

ExtElem ExtField::unit_group_generator() const {
    const std::uint64_t m = unit_order();
    auto fac = factor_integer(Int(m));
    for (std::uint64_t i = 1; i < card(); ++i) {
        ExtElem g = from_index(i);
        bool ok = true;
        for (const auto& [p, e] : fac) {
            (void)e;
            if (pow(g, m / p) == one()) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("ExtField: no generator found");
}

ExtElem ExtField::eval_poly(const Poly& p, const ExtElem& x) const {
    ExtElem r = zero();
    for (std::size_t i = p.c.size(); i-- > 0;) {
        r = mul(r, x);
        if (p.c[i] != 0) r = add(r, from_fq(p.c[i]));
    }
    return r;
}

EPoly epoly_from_poly(const ExtField& E, const Poly& p) {
    EPoly r;
    r.c.reserve(p.c.size());
    for (FqElem v : p.c) r.c.push_back(E.from_fq(v));
    r.trim(E);
    return r;
}

EPoly epoly_constant(const ExtField& E, const ExtElem& a) {
    EPoly r;
    if (!E.is_zero(a)) r.c.push_back(a);
    return r;
}

EPoly epoly_add(const ExtField& E, const EPoly& a, const EPoly& b) {
    EPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), E.zero());
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        ExtElem x = i < a.c.size() ? a.c[i] : E.zero();
        ExtElem y = i < b.c.size() ? b.c[i] : E.zero();
        r.c[i] = E.add(x, y);
    }
    r.trim(E);
    return r;
}

EPoly epoly_sub(const ExtField& E, const EPoly& a, const EPoly& b) {
    EPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), E.zero());
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        ExtElem x = i < a.c.size() ? a.c[i] : E.zero();
        ExtElem y = i < b.c.size() ? b.c[i] : E.zero();
        r.c[i] = E.sub(x, y);
    }
    r.trim(E);
    return r;
}

EPoly epoly_mul(const ExtField& E, const EPoly& a, const EPoly& b) {
    if (a.is_zero() || b.is_zero()) return EPoly{};
    EPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, E.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (E.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = E.add(r.c[i + j], E.mul(a.c[i], b.c[j]));
    }
    r.trim(E);
    return r;
}

EPoly epoly_scale(const ExtField& E, const EPoly& a, const ExtElem& s) {
    if (E.is_zero(s)) return EPoly{};
    EPoly r = a;
    for (auto& x : r.c) x = E.mul(x, s);
    r.trim(E);
    return r;
}

std::pair<EPoly, EPoly> epoly_divrem(const ExtField& E, const EPoly& a, const EPoly& b) {
    if (b.is_zero()) throw std::domain_error("epoly_divrem: division by zero");
    if (a.deg() < b.deg()) return {EPoly{}, a};
    EPoly rem = a;
    EPoly quot;
    quot.c.assign(a.deg() - b.deg() + 1, E.zero());
    const ExtElem lc_inv = E.inv(b.c.back());
    for (int k = a.deg() - b.deg(); k >= 0; --k) {
        const ExtElem top = rem.c[k + b.deg()];
        if (E.is_zero(top)) continue;
        const ExtElem f = E.mul(top, lc_inv);
        quot.c[k] = f;
        for (int i = 0; i <= b.deg(); ++i)
            rem.c[k + i] = E.sub(rem.c[k + i], E.mul(f, b.c[i]));
    }
    rem.trim(E);
    quot.trim(E);
    return {quot, rem};
}

EPoly epoly_mod(const ExtField& E, const EPoly& a, const EPoly& b) {
    return epoly_divrem(E, a, b).second;
}

EPoly epoly_gcd(const ExtField& E, const EPoly& a, const EPoly& b) {
    EPoly x = a, y = b;
    while (!y.is_zero()) {
        EPoly r = epoly_mod(E, x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return epoly_scale(E, x, E.inv(x.c.back()));
}

EPoly epoly_powmod(const ExtField& E, const EPoly& a, std::uint64_t e, const EPoly& m) {
    EPoly base = epoly_mod(E, a, m);
    EPoly r;
    r.c.assign(1, E.one());
    while (e) {
        if (e & 1) r = epoly_mod(E, epoly_mul(E, r, base), m);
        base = epoly_mod(E, epoly_mul(E, base, base), m);
        e >>= 1;
    }
    return r;
}

ExtElem epoly_eval(const ExtField& E, const EPoly& a, const ExtElem& x) {
    ExtElem r = E.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) r = E.add(E.mul(r, x), a.c[i]);
    return r;
}

namespace {

void collect_roots(const ExtField& E, const EPoly& f, Rng& rng, std::vector<ExtElem>& out) {
    if (f.deg() == 0) return;
    if (f.deg() == 1) {
        // root of c1 Z + c0
        out.push_back(E.neg(E.div(f.c[0], f.c[1])));
        return;
    }
    // Split the squarefree all-roots polynomial with quadratic characters of
    // random shifts.
    while (true) {
        ExtElem shift = E.from_index(rng.below(E.card()));
        EPoly z;
        z.c = {shift, E.one()};
        EPoly b = epoly_powmod(E, z, E.unit_order() / 2, f);
        b = epoly_sub(E, b, epoly_constant(E, E.one()));
        EPoly g = epoly_gcd(E, b, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            collect_roots(E, g, rng, out);
            collect_roots(E, epoly_divrem(E, f, g).first, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<ExtElem> epoly_roots(const ExtField& E, const EPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("epoly_roots: zero polynomial");
    std::vector<ExtElem> out;
    if (f.deg() < 1) return out;
    // Z^(q^n) - Z mod f isolates the roots lying in the field.
    EPoly z;
    z.c = {E.zero(), E.one()};
    EPoly zq = epoly_powmod(E, z, E.card(), f);
    EPoly lin = epoly_gcd(E, epoly_sub(E, zq, z), f);
    if (lin.deg() < 1) return out;
    if (!E.base().odd()) throw std::domain_error("epoly_roots: requires odd q");
    Rng rng(Rng::kDefaultSeed);
    collect_roots(E, lin, rng, out);
    std::sort(out.begin(), out.end(),
              [](const ExtElem& a, const ExtElem& b) { return poly_cmp(a.rep, b.rep) < 0; });
    return out;
}

namespace {

// Baby-step giant-step for g of prime-power order.
std::uint64_t bsgs(const ExtField& E, const ExtElem& g, const ExtElem& h, std::uint64_t order) {
    const std::uint64_t m = to_u64(isqrt(Int(order))) + 1;
    std::unordered_map<ExtElem, std::uint64_t, ExtElemHash> table;
    table.reserve(m);
    ExtElem cur = E.one();
    for (std::uint64_t j = 0; j < m; ++j) {
        table.emplace(cur, j);
        cur = E.mul(cur, g);
    }
    const ExtElem step = E.inv(E.pow(g, m));
    ExtElem gamma = h;
    for (std::uint64_t i = 0; i <= m; ++i) {
        auto it = table.find(gamma);
        if (it != table.end()) return i * m + it->second;
        gamma = E.mul(gamma, step);
    }
    throw std::domain_error("ext_dlog: element not in the subgroup");
}

} // namespace

std::uint64_t ext_dlog(const ExtField& E, const ExtElem& g, const ExtElem& h,
                       std::uint64_t order) {
    auto fac = factor_integer(Int(order));
    std::uint64_t x = 0;
    std::uint64_t mod_acc = 1;
    for (const auto& [p, e] : fac) {
        std::uint64_t pe = 1;
        for (unsigned i = 0; i < e; ++i) pe *= p;
        // Solve in the order-p^e quotient, lifting digit by digit.
        const ExtElem gp = E.pow(g, order / pe);
        const ExtElem hp = E.pow(h, order / pe);
        std::uint64_t xk = 0;
        std::uint64_t pk = 1;
        const ExtElem gp_base = E.pow(gp, pe / p); // order p
        for (unsigned k = 0; k < e; ++k) {
            ExtElem target = E.mul(hp, E.inv(E.pow(gp, xk)));
            target = E.pow(target, pe / (pk * p));
            const std::uint64_t d = bsgs(E, gp_base, target, p);
            xk += d * pk;
            pk *= p;
        }
        // CRT combine: x' = x (mod mod_acc), x' = xk (mod pe).
        std::int64_t s0 = 1, s1 = 0;
        std::uint64_t r0 = mod_acc % pe, r1 = pe;
        while (r1 != 0) {
            const std::uint64_t qd = r0 / r1;
            std::uint64_t rt = r0 - qd * r1; r0 = r1; r1 = rt;
            std::int64_t st = s0 - static_cast<std::int64_t>(qd) * s1; s0 = s1; s1 = st;
        }
        const std::uint64_t inv = static_cast<std::uint64_t>((s0 % static_cast<std::int64_t>(pe) +
                                                              static_cast<std::int64_t>(pe)) %
                                                             static_cast<std::int64_t>(pe));
        const std::uint64_t diff = (xk + pe - x % pe) % pe;
        x += mod_acc * detail::mulmod_u64(diff, inv, pe);
        mod_acc *= pe;
    }
    return x;
}

} // namespace hasse
