#include "hasse/jacobian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hasse/factor.hpp"

namespace hasse {

HyperCurve::HyperCurve(const Fq& F, Poly d) : F_(F), d_(std::move(d)) {
    if (!F_.odd()) throw std::invalid_argument("HyperCurve: requires odd q");
    if (d_.deg() < 1 || d_.deg() % 2 == 0)
        throw std::invalid_argument("HyperCurve: model degree must be odd (one place at infinity)");
    if (!is_squarefree(F_, d_)) throw std::invalid_argument("HyperCurve: model must be square-free");
    g_ = static_cast<unsigned>((d_.deg() - 1) / 2);
}

MumfordDivisor mumford_make(const HyperCurve& C, Poly u, Poly v) {
    const Fq& F = C.field();
    if (u.is_zero() || !u.is_monic())
        throw std::invalid_argument("mumford_make: u must be monic");
    if (u.deg() > static_cast<int>(C.genus()))
        throw std::invalid_argument("mumford_make: deg u exceeds the genus");
    v = poly_mod(F, v, u);
    const Poly check = poly_sub(F, poly_mul(F, v, v), C.rhs());
    if (!poly_mod(F, check, u).is_zero())
        throw std::invalid_argument("mumford_make: u does not divide v^2 - d");
    return MumfordDivisor{std::move(u), std::move(v)};
}

MumfordDivisor mumford_neg(const HyperCurve& C, const MumfordDivisor& D) {
    return MumfordDivisor{D.u, poly_mod(C.field(), poly_neg(C.field(), D.v), D.u)};
}

std::uint64_t count_points(const HyperCurve& C, unsigned k) {
    if (k < 1 || k > 2 * C.genus() + 2)
        throw std::invalid_argument("count_points: extension degree out of range");
    const ExtField E(C.field(), k);
    if (E.card() > (1ull << 24))
        throw std::invalid_argument("count_points: field too large for enumeration");
    std::uint64_t n = 1; // the point at infinity
    for (std::uint64_t i = 0; i < E.card(); ++i) {
        const ExtElem x = E.from_index(i);
        const ExtElem e = E.eval_poly(C.rhs(), x);
        if (E.is_zero(e))
            n += 1;
        else if (E.is_square(e))
            n += 2;
    }
    return n;
}

LPoly l_polynomial(const HyperCurve& C) {
    const unsigned g = C.genus();
    LPoly L;
    L.c.assign(2 * g + 1, 0);
    L.c[0] = 1;
    if (g == 0) {
        L.h = 1;
        return L;
    }
    const Int q(C.field().q());
    // power sums s_k = q^k + 1 - N_k of the inverse roots
    std::vector<Int> s(g + 1, 0);
    for (unsigned k = 1; k <= g; ++k)
        s[k] = int_pow(q, k) + 1 - Int(count_points(C, k));
    // Newton's identities: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} s_i
    std::vector<Int> e(2 * g + 2, 0);
    e[0] = 1;
    for (unsigned k = 1; k <= g; ++k) {
        Int acc = 0;
        for (unsigned i = 1; i <= k; ++i) {
            const Int term = e[k - i] * s[i];
            acc += (i % 2 == 1) ? term : -term;
        }
        if (acc % Int(k) != 0) throw std::logic_error("l_polynomial: Newton identity not integral");
        e[k] = acc / Int(k);
    }
    for (unsigned k = 0; k <= g; ++k) L.c[k] = (k % 2 == 0) ? e[k] : -e[k];
    // functional equation fills the upper half
    for (unsigned i = 0; i < g; ++i) L.c[2 * g - i] = int_pow(q, g - i) * L.c[i];
    for (unsigned k = g + 1; k <= 2 * g; ++k) e[k] = (k % 2 == 0) ? L.c[k] : -L.c[k];

    // Cross-check with one extra count when the enumeration stays cheap.
    std::uint64_t card = 1;
    bool small = true;
    for (unsigned i = 0; i < g + 1; ++i) {
        card *= C.field().q();
        if (card > (1ull << 22)) { small = false; break; }
    }
    if (small) {
        Int pk = 0;
        for (unsigned i = 1; i <= g; ++i) {
            const Int term = e[i] * s[g + 1 - i];
            pk += (i % 2 == 1) ? term : -term;
        }
        const Int sign = ((g + 1) % 2 == 1) ? 1 : -1;
        pk += sign * Int(g + 1) * e[g + 1];
        const Int measured = int_pow(q, g + 1) + 1 - Int(count_points(C, g + 1));
        if (pk != measured)
            throw std::logic_error("l_polynomial: functional-equation cross-check failed");
    }

    L.h = 0;
    for (const Int& c : L.c) L.h += c;
    if (L.h <= 0) throw std::logic_error("l_polynomial: nonpositive class number");
    return L;
}

MillerContext make_miller_context(const HyperCurve& C, const PrimePoly& p) {
    const unsigned s = static_cast<unsigned>(p.deg());
    ExtField E2(C.field(), 2 * s);
    auto roots = epoly_roots(E2, epoly_from_poly(E2, p.poly()));
    if (roots.empty()) throw std::logic_error("make_miller_context: prime has no root upstairs");
    ExtElem x0 = roots.front();
    ExtElem dx0 = E2.eval_poly(C.rhs(), x0);
    if (E2.is_zero(dx0))
        throw std::invalid_argument("make_miller_context: prime divides the model (not inert)");
    if (!E2.is_square(dx0))
        throw std::invalid_argument("make_miller_context: model is a square at the prime (not inert)");
    ExtElem y0 = E2.sqrt(dx0);
    return MillerContext{std::move(E2), std::move(x0), std::move(y0), p.poly(), C.lead(),
                         C.genus()};
}

MillerTriple miller_one(const MillerContext& ctx) { return MillerTriple{ctx.E2.one(), 0, 1}; }

void miller_mul(const MillerContext& ctx, MillerTriple& acc, const MillerTriple& f) {
    acc.val = ctx.E2.mul(acc.val, f.val);
    acc.ord += f.ord;
    acc.lead = ctx.E2.base().mul(acc.lead, f.lead);
}

void miller_square(const MillerContext& ctx, MillerTriple& acc) {
    acc.val = ctx.E2.mul(acc.val, acc.val);
    acc.ord *= 2;
    acc.lead = ctx.E2.base().mul(acc.lead, acc.lead);
}

namespace {

// acc *= (value v, pole order m, leading coefficient c)^e
void apply_factor(const MillerContext& ctx, MillerTriple& acc, const ExtElem& value,
                  long long m, FqElem c, long long e) {
    const Fq& F = ctx.E2.base();
    if (ctx.E2.is_zero(value))
        throw std::domain_error("miller: function vanishes at the evaluation point");
    const std::uint64_t ae = static_cast<std::uint64_t>(e < 0 ? -e : e);
    ExtElem vp = ctx.E2.pow(value, ae);
    if (e < 0) vp = ctx.E2.inv(vp);
    acc.val = ctx.E2.mul(acc.val, vp);
    acc.ord += e * m;
    FqElem cp = F.pow(c, ae % (F.q() - 1));
    if (e < 0) cp = F.inv(cp);
    acc.lead = F.mul(acc.lead, cp);
}

} // namespace

void miller_mul_poly(const MillerContext& ctx, MillerTriple& acc, const Poly& p, long long e) {
    if (p.is_zero()) throw std::invalid_argument("miller_mul_poly: zero polynomial");
    if (e == 0 || p.deg() == 0) {
        // constants cancel in the normalized value; track them anyway
        if (e != 0)
            apply_factor(ctx, acc, ctx.E2.from_fq(p.lc()), 0, p.lc(), e);
        return;
    }
    const Fq& F = ctx.E2.base();
    const ExtElem value = ctx.E2.eval_poly(p, ctx.x0);
    const long long m = 2ll * p.deg();
    const FqElem c = F.mul(p.lc(), F.pow(F.inv(ctx.delta), static_cast<std::uint64_t>(p.deg())));
    apply_factor(ctx, acc, value, m, c, e);
}

void miller_mul_line(const MillerContext& ctx, MillerTriple& acc, const Poly& v, long long e) {
    const Fq& F = ctx.E2.base();
    const ExtElem value = ctx.E2.sub(ctx.y0, ctx.E2.eval_poly(v, ctx.x0));
    const long long dv = v.deg();
    long long m;
    FqElem c;
    if (2 * dv > 2ll * ctx.genus + 1) {
        m = 2 * dv;
        c = F.mul(F.neg(v.lc()), F.pow(F.inv(ctx.delta), static_cast<std::uint64_t>(dv)));
    } else {
        m = 2ll * ctx.genus + 1;
        c = F.pow(F.inv(ctx.delta), ctx.genus);
    }
    apply_factor(ctx, acc, value, m, c, e);
}

ExtElem miller_normalized_value(const MillerContext& ctx, const MillerTriple& f) {
    return ctx.E2.mul(f.val, ctx.E2.inv(ctx.E2.from_fq(f.lead)));
}

MumfordDivisor cantor_add(const HyperCurve& C, const MumfordDivisor& a, const MumfordDivisor& b,
                          const MillerContext* ctx, MillerTriple* acc) {
    const Fq& F = C.field();
    // Composition (Cantor): d = gcd(u1, u2, v1 + v2) = s1 u1 + s2 u2 + s3 (v1 + v2).
    Poly e1, e2;
    const Poly d1 = poly_ext_gcd(F, a.u, b.u, e1, e2);
    Poly c1, c2;
    const Poly vsum = poly_add(F, a.v, b.v);
    const Poly d = poly_ext_gcd(F, d1, vsum, c1, c2);
    const Poly s1 = poly_mul(F, c1, e1);
    const Poly s2 = poly_mul(F, c1, e2);
    const Poly& s3 = c2;

    Poly u = poly_div_exact(F, poly_mul(F, a.u, b.u), poly_mul(F, d, d));
    Poly v = poly_add(F, poly_mul(F, poly_mul(F, s1, a.u), b.v),
                      poly_mul(F, poly_mul(F, s2, b.u), a.v));
    v = poly_add(F, v, poly_mul(F, s3, poly_add(F, poly_mul(F, a.v, b.v), C.rhs())));
    v = poly_mod(F, poly_div_exact(F, v, d), u);

    if (acc && d.deg() > 0) miller_mul_poly(*ctx, *acc, d, 1);

    // Reduction to deg u <= g.
    while (u.deg() > static_cast<int>(C.genus())) {
        Poly unext = poly_div_exact(F, poly_sub(F, C.rhs(), poly_mul(F, v, v)), u);
        unext = poly_monic(F, unext);
        Poly vnext = poly_mod(F, poly_neg(F, v), unext);
        if (acc) {
            miller_mul_line(*ctx, *acc, v, 1);
            miller_mul_poly(*ctx, *acc, unext, -1);
        }
        u = std::move(unext);
        v = std::move(vnext);
    }
    return MumfordDivisor{std::move(u), std::move(v)};
}

MumfordDivisor mumford_scalar(const HyperCurve& C, const MumfordDivisor& D, const Int& n) {
    Int m = n;
    MumfordDivisor base = D;
    if (m < 0) {
        base = mumford_neg(C, base);
        m = -m;
    }
    MumfordDivisor r; // identity
    while (m > 0) {
        if ((m & 1) != 0) r = cantor_add(C, r, base);
        base = cantor_add(C, base, base);
        m >>= 1;
    }
    return r;
}

std::pair<MumfordDivisor, MillerTriple> miller_scalar(const HyperCurve& C,
                                                      const MillerContext& ctx,
                                                      const MumfordDivisor& D, const Int& n) {
    if (n < 0) throw std::invalid_argument("miller_scalar: negative multiplier");
    MillerTriple f = miller_one(ctx);
    if (n == 0) return {MumfordDivisor{}, f};
    const unsigned bits = boost::multiprecision::msb(n);
    MumfordDivisor R = D;
    for (int i = static_cast<int>(bits) - 1; i >= 0; --i) {
        miller_square(ctx, f);
        R = cantor_add(C, R, R, &ctx, &f);
        if (boost::multiprecision::bit_test(n, static_cast<unsigned>(i)))
            R = cantor_add(C, R, D, &ctx, &f);
    }
    return {R, f};
}

ExtElem miller_evaluate(const HyperCurve& C, const MillerContext& ctx,
                        const std::vector<std::pair<MumfordDivisor, long long>>& relation) {
    MillerTriple f = miller_one(ctx);
    MumfordDivisor total; // identity
    for (const auto& [D, e] : relation) {
        if (e == 0) continue;
        const MumfordDivisor base = e < 0 ? mumford_neg(C, D) : D;
        const Int mult = e < 0 ? Int(-e) : Int(e);
        auto [cls, fi] = miller_scalar(C, ctx, base, mult);
        miller_mul(ctx, f, fi);
        total = cantor_add(C, total, cls, &ctx, &f);
    }
    if (!mumford_is_identity(total))
        throw std::invalid_argument("miller_evaluate: combination is not principal");
    return miller_normalized_value(ctx, f);
}

Poly sqrt_mod_prime(const Fq& F, const Poly& a, const Poly& w) {
    const ExtField E = ExtField::with_modulus(F, w);
    const ExtElem x = E.from_poly(a);
    if (E.is_zero(x)) throw std::domain_error("sqrt_mod_prime: zero residue");
    return E.sqrt(x).rep;
}

MumfordDivisor random_divisor(const HyperCurve& C, Rng& rng) {
    const Fq& F = C.field();
    const unsigned g = C.genus();
    MumfordDivisor out;
    unsigned picked = 0;
    unsigned guard = 0;
    while (picked < 2) {
        // Trivial or near-trivial Jacobians may not have enough small prime
        // divisors; whatever has been accumulated is still a valid sample.
        if (++guard > 4096) break;
        const int d = 1 + static_cast<int>(rng.below(g));
        Poly w = poly_from_index(F, d, rng.below([&] {
            std::uint64_t n = 1;
            for (int i = 0; i < d; ++i) n *= F.q();
            return n;
        }()));
        if (!is_irreducible(F, w)) continue;
        const Poly r = poly_mod(F, C.rhs(), w);
        MumfordDivisor prime_div;
        if (r.is_zero()) {
            prime_div = MumfordDivisor{w, Poly{}};
        } else {
            const ExtField E = ExtField::with_modulus(F, w);
            const ExtElem rr = E.from_poly(r);
            if (!E.is_square(rr)) continue;
            Poly v = E.sqrt(rr).rep;
            if (rng.next() & 1) v = poly_neg(F, v);
            prime_div = MumfordDivisor{w, v};
        }
        out = cantor_add(C, out, prime_div);
        ++picked;
    }
    return out;
}

namespace {

using TableKey = std::pair<std::vector<FqElem>, std::vector<FqElem>>;

TableKey key_of(const MumfordDivisor& D) { return {D.u.c, D.v.c}; }

// Cayley-graph closure of the generating set with one word per element.
std::map<TableKey, std::vector<long long>> closure(const HyperCurve& C,
                                                   const std::vector<MumfordDivisor>& gens,
                                                   std::uint64_t cap) {
    std::map<TableKey, std::vector<long long>> table;
    std::vector<MumfordDivisor> frontier{MumfordDivisor{}};
    table[key_of(MumfordDivisor{})] = std::vector<long long>(gens.size(), 0);
    while (!frontier.empty()) {
        std::vector<MumfordDivisor> next;
        for (const auto& e : frontier) {
            const auto w = table.at(key_of(e));
            for (std::size_t i = 0; i < gens.size(); ++i) {
                MumfordDivisor f = cantor_add(C, e, gens[i]);
                auto k = key_of(f);
                if (table.count(k)) continue;
                auto wf = w;
                wf[i] += 1;
                table.emplace(std::move(k), std::move(wf));
                next.push_back(std::move(f));
                if (table.size() > cap)
                    throw std::runtime_error("group_structure: subgroup exceeds the expected order");
            }
        }
        frontier = std::move(next);
    }
    return table;
}

struct SylowBasis {
    std::vector<MumfordDivisor> gens;
    std::vector<Int> orders; // descending
};

SylowBasis sylow_structure(const HyperCurve& C, std::uint64_t ell_power, const Int& cofactor,
                           Rng& rng, unsigned budget) {
    std::vector<MumfordDivisor> gens;
    std::map<TableKey, std::vector<long long>> table;
    table[key_of(MumfordDivisor{})] = {};
    unsigned attempts = 0;
    while (table.size() < ell_power) {
        if (++attempts > budget)
            throw std::runtime_error("group_structure: sampling budget exhausted before the Sylow "
                                     "subgroup was generated");
        MumfordDivisor z = mumford_scalar(C, random_divisor(C, rng), cofactor);
        if (table.count(key_of(z))) continue;
        gens.push_back(std::move(z));
        table = closure(C, gens, ell_power);
    }

    // Relation lattice from the Cayley closure: for every element e and
    // generator i, word(e) + unit_i - word(e g_i) vanishes in the group.
    std::vector<std::vector<Int>> cols;
    for (const auto& [k, w] : table) {
        MumfordDivisor e = mumford_make(C, Poly(std::vector<FqElem>(k.first)),
                                        Poly(std::vector<FqElem>(k.second)));
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const auto& wf = table.at(key_of(cantor_add(C, e, gens[i])));
            std::vector<Int> rel(gens.size(), 0);
            bool nonzero = false;
            for (std::size_t j = 0; j < gens.size(); ++j) {
                rel[j] = Int(w[j]) - Int(wf[j]) + Int(i == j ? 1 : 0);
                nonzero = nonzero || rel[j] != 0;
            }
            if (nonzero) cols.push_back(std::move(rel));
        }
    }
    // Matrix with relations as columns: rows = generators.
    std::vector<std::vector<Int>> A(gens.size(), std::vector<Int>(std::max<std::size_t>(cols.size(), 1), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < gens.size(); ++i) A[i][j] = cols[j][i];
    std::vector<std::vector<Int>> W;
    const auto diag = smith_normal_form(A, &W);

    SylowBasis out;
    Int order_product = 1;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] == 0) throw std::logic_error("group_structure: relation lattice not full rank");
        order_product *= diag[i];
        if (diag[i] == 1) continue;
        MumfordDivisor b;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (W[j][i] != 0) b = cantor_add(C, b, mumford_scalar(C, gens[j], W[j][i]));
        // verify the exact order
        if (!mumford_is_identity(mumford_scalar(C, b, diag[i])))
            throw std::logic_error("group_structure: basis element order mismatch");
        for (const auto& [p, e] : factor_integer(diag[i])) {
            (void)e;
            if (mumford_is_identity(mumford_scalar(C, b, diag[i] / Int(p))))
                throw std::logic_error("group_structure: basis element order too small");
        }
        out.gens.push_back(std::move(b));
        out.orders.push_back(diag[i]);
    }
    if (order_product != Int(ell_power))
        throw std::logic_error("group_structure: Sylow order mismatch");
    // descending order
    std::reverse(out.gens.begin(), out.gens.end());
    std::reverse(out.orders.begin(), out.orders.end());
    return out;
}

} // namespace

Pic0Data group_structure(const HyperCurve& C, std::uint64_t seed, unsigned budget) {
    Pic0Data out;
    out.L = l_polynomial(C);
    if (out.L.h == 1) {
        out.structure = AbGroupStruct{0, {}};
        return out;
    }
    if (out.L.h > Int(1) << 40)
        throw std::invalid_argument("group_structure: class number too large for this build");
    Rng rng(seed);
    const auto factors = factor_integer(out.L.h);

    std::vector<SylowBasis> parts;
    std::size_t max_len = 0;
    for (const auto& [ell, a] : factors) {
        std::uint64_t ell_power = 1;
        for (unsigned i = 0; i < a; ++i) ell_power *= ell;
        if (ell_power > 2000000)
            throw std::invalid_argument("group_structure: Sylow subgroup too large for enumeration");
        parts.push_back(sylow_structure(C, ell_power, out.L.h / Int(ell_power), rng, budget));
        max_len = std::max(max_len, parts.back().orders.size());
    }
    // Combine across primes: align the largest orders together.
    std::vector<Int> orders(max_len, 1);
    std::vector<MumfordDivisor> gens(max_len);
    for (const auto& part : parts) {
        for (std::size_t i = 0; i < part.orders.size(); ++i) {
            orders[i] *= part.orders[i];
            gens[i] = cantor_add(C, gens[i], part.gens[i]);
        }
    }
    Int prod = 1;
    for (std::size_t i = 0; i < max_len; ++i) {
        out.basis.push_back(Pic0Gen{gens[i], orders[i]});
        prod *= orders[i];
    }
    if (prod != out.L.h) throw std::logic_error("group_structure: order bookkeeping failed");
    std::vector<Int> inv = orders;
    std::reverse(inv.begin(), inv.end()); // ascending divisibility
    out.structure = abelian_from_cyclic_orders(0, inv);
    return out;
}

RayClassData ray_class_structure(const QuadExt& K, const PrimePoly& p, std::uint64_t seed) {
    if (K.infinity_type() != SplitType::Ramified)
        throw std::invalid_argument("ray_class_structure: only the totally ramified infinite place "
                                    "is supported (odd-degree discriminant)");
    if (place_split_type(K, p) != SplitType::Inert)
        throw std::invalid_argument("ray_class_structure: the prime must be inert in K");

    const HyperCurve C(K.field(), K.disc());
    const Fq& F = C.field();
    RayClassData out;
    out.pic0 = group_structure(C, seed);
    out.cl_k = AbGroupStruct{1, out.pic0.structure.invariants};

    const MillerContext ctx = make_miller_context(C, p);
    out.kernel_order = Int(ctx.E2.unit_order());
    const ExtElem g0 = ctx.E2.unit_group_generator();

    Rng rng(seed ^ 0xabcdef1234567890ull);
    const std::size_t k = out.pic0.basis.size();
    std::vector<Int> dlogs(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        const MumfordDivisor& gi = out.pic0.basis[i].gen;
        const Int& ni = out.pic0.basis[i].order;
        bool done = false;
        for (unsigned attempt = 0; attempt < 32 && !done; ++attempt) {
            const MumfordDivisor r = random_divisor(C, rng);
            const MumfordDivisor w = cantor_add(C, gi, r);
            const long long aw = w.u.deg(), ar = r.u.deg();
            if ((aw + ar) % 2 != 0) continue;
            // x - c misses the evaluation point; only a degree-one prime can
            // collide with x0.
            FqElem c = 0;
            if (p.deg() == 1)
                while (ctx.E2.from_fq(c) == ctx.x0) ++c;
            try {
                auto [wn, fw] = miller_scalar(C, ctx, w, ni);
                auto [rn, fr] = miller_scalar(C, ctx, mumford_neg(C, r), ni);
                MillerTriple f = fw;
                miller_mul(ctx, f, fr);
                const MumfordDivisor total = cantor_add(C, wn, rn, &ctx, &f);
                if (!mumford_is_identity(total))
                    throw std::logic_error("ray_class_structure: relation did not close");
                const Int big_n = ni * Int((aw + ar) / 2);
                miller_mul_poly(ctx, f, Poly(std::vector<FqElem>{F.neg(c), 1}),
                                -static_cast<long long>(to_u64(big_n)));
                if (f.ord != 0)
                    throw std::logic_error("ray_class_structure: unbalanced infinite part");
                const ExtElem psi = miller_normalized_value(ctx, f);
                dlogs[i] = Int(ext_dlog(ctx.E2, g0, psi, ctx.E2.unit_order()));
                done = true;
            } catch (const std::domain_error&) {
                continue; // support collision: re-randomize the representative
            }
        }
        if (!done)
            throw std::runtime_error("ray_class_structure: re-randomization budget exhausted");
    }

    // Presentation on (t_1, ..., t_k, kappa): n_i t_i = dlog_i kappa,
    // kernel_order kappa = 0.
    std::vector<std::vector<Int>> A(k + 1, std::vector<Int>(k + 1, 0));
    for (std::size_t i = 0; i < k; ++i) {
        A[i][i] = out.pic0.basis[i].order;
        A[k][i] = -dlogs[i];
    }
    A[k][k] = out.kernel_order;
    const auto diag = smith_normal_form(A);
    std::vector<Int> inv;
    for (const Int& d : diag)
        if (d > 1) inv.push_back(d);
    out.ray = abelian_from_cyclic_orders(1, inv);
    if (out.ray.torsion_order() != out.kernel_order * out.pic0.L.h)
        throw std::logic_error("ray_class_structure: exactness check failed");
    return out;
}

GlobalObstruction check_global_obstruction(const QuadExt& K, const PrimePoly& p,
                                           std::uint64_t seed) {
    GlobalObstruction out;
    out.groups = ray_class_structure(K, p, seed);
    const Int q(K.field().q());
    out.z_order = (int_pow(q, 2 * static_cast<unsigned>(p.deg())) - 1) / (q * q - 1);
    out.target = abelian_product(AbGroupStruct{0, out.z_order > 1 ? std::vector<Int>{out.z_order}
                                                                  : std::vector<Int>{}},
                                 out.groups.cl_k);
    out.obstructed = !can_surject(out.groups.ray, out.target);
    return out;
}

} // namespace hasse
