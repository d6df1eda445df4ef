// Test-only oracles, independent of the library paths they check.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hasse/integer.hpp"
#include "hasse/poly.hpp"

namespace hasse::oracle {

// Exact square root in A = F_q[T] by descending-coefficient matching.
inline std::optional<Poly> poly_sqrt_exact(const Fq& F, const Poly& a) {
    if (a.is_zero()) return Poly::zero();
    if (a.deg() % 2 != 0) return std::nullopt;
    if (!F.is_square_unit(a.lc())) return std::nullopt;
    const int h = a.deg() / 2;
    Poly s;
    s.c.assign(static_cast<std::size_t>(h) + 1, 0);
    // lc(s) = a square root of lc(a) in F_q.
    FqElem lc_root = 0;
    for (FqElem x = 1; x < F.q(); ++x)
        if (F.mul(x, x) == a.lc()) { lc_root = x; break; }
    s.c[static_cast<std::size_t>(h)] = lc_root;
    const FqElem inv2lc = F.inv(F.mul(2 % F.q(), lc_root));
    for (int j = h - 1; j >= 0; --j) {
        // Coefficient of T^(h+j) in s^2 must match a.
        FqElem acc = 0;
        for (int i = j + 1; i <= h; ++i) {
            const int k = h + j - i;
            if (k > h || k <= j) continue;
            acc = F.add(acc, F.mul(s.c[static_cast<std::size_t>(i)], s.c[static_cast<std::size_t>(k)]));
        }
        const FqElem target = a.coeff(static_cast<std::size_t>(h + j));
        s.c[static_cast<std::size_t>(j)] = F.mul(F.sub(target, acc), inv2lc);
    }
    s.trim();
    if (poly_mul(F, s, s) == a) return s;
    return std::nullopt;
}

// Truncated Laurent series square root at infinity: decides whether a is a
// square in F_q((1/T)) by actually constructing the series to finite
// precision and checking the residual.
inline bool is_square_at_infinity_series(const Fq& F, const Poly& a, unsigned precision = 24) {
    if (a.is_zero()) return true;
    if (a.deg() % 2 != 0) return false;
    if (!F.is_square_unit(a.lc())) return false;
    // a = lc T^(2h) (1 + w), w in (1/T) F_q[[1/T]]; series coefficients of the
    // root r = 1 + r_1/T + r_2/T^2 + ... solve 2 r_k = w_k - sum r_i r_{k-i}.
    const int twoh = a.deg();
    std::vector<FqElem> w(precision + 1, 0);
    const FqElem lcinv = F.inv(a.lc());
    for (unsigned k = 1; k <= precision; ++k) {
        const int idx = twoh - static_cast<int>(k);
        w[k] = idx >= 0 ? F.mul(a.coeff(static_cast<std::size_t>(idx)), lcinv) : 0;
    }
    std::vector<FqElem> r(precision + 1, 0);
    r[0] = 1;
    const FqElem half = F.inv(2 % F.q());
    for (unsigned k = 1; k <= precision; ++k) {
        FqElem acc = 0;
        for (unsigned i = 1; i < k; ++i) acc = F.add(acc, F.mul(r[i], r[k - i]));
        r[k] = F.mul(F.sub(w[k], acc), half);
    }
    // Residual check: (r^2 - (1 + w)) must vanish to the precision used.
    std::vector<FqElem> r2(precision + 1, 0);
    for (unsigned i = 0; i <= precision; ++i)
        for (unsigned j = 0; i + j <= precision; ++j)
            r2[i + j] = F.add(r2[i + j], F.mul(r[i], r[j]));
    for (unsigned k = 0; k <= precision; ++k) {
        const FqElem expect = k == 0 ? 1 : w[k];
        if (r2[k] != expect) return false;
    }
    return true;
}

// Direct check of the five membership conditions for the quadratic datum
// X^2 - t X + mu y: irreducibility over F, one place over infinity, the
// y-adic Newton polygon, and the absolute-value balance.
inline bool weil_conditions_direct(const Fq& F, const Poly& t, FqElem mu, const Poly& y) {
    const Poly disc = poly_sub(F, poly_mul(F, t, t), poly_scale(F, y, F.reduce(4 * static_cast<std::int64_t>(mu))));
    // (2): quadratic over F.
    if (poly_sqrt_exact(F, disc)) return false;
    // (3): unique place over infinity <=> disc not a square in F_inf.
    if (is_square_at_infinity_series(F, disc)) return false;
    // (5): single slope -deg(y)/2 at infinity: deg t <= deg(y)/2.
    if (2 * t.deg() > y.deg()) return false;
    // (4): y-adic Newton polygon. v_y(mu y) = 1; either t = 0 (Eisenstein,
    // ramified: one prime, divides pi) or v_y(t) = 0 (slopes 0 and 1: pi is
    // divisible by exactly one of the two primes over y).
    if (!t.is_zero() && poly_mod(F, t, y).is_zero()) return false; // cannot occur for deg t < deg y
    return true;
}

// 2x2 matrices over A for the companion-matrix oracles.
using Mat2 = std::array<Poly, 4>; // row major: a b / c d

inline Mat2 mat2_mul(const Fq& F, const Mat2& x, const Mat2& y) {
    return Mat2{
        poly_add(F, poly_mul(F, x[0], y[0]), poly_mul(F, x[1], y[2])),
        poly_add(F, poly_mul(F, x[0], y[1]), poly_mul(F, x[1], y[3])),
        poly_add(F, poly_mul(F, x[2], y[0]), poly_mul(F, x[3], y[2])),
        poly_add(F, poly_mul(F, x[2], y[1]), poly_mul(F, x[3], y[3])),
    };
}

inline Mat2 mat2_pow(const Fq& F, Mat2 base, std::uint64_t e) {
    Mat2 r{Poly::constant(1), Poly{}, Poly{}, Poly::constant(1)};
    while (e) {
        if (e & 1) r = mat2_mul(F, r, base);
        base = mat2_mul(F, base, base);
        e >>= 1;
    }
    return r;
}

// Companion matrix of X^2 - t X + b.
inline Mat2 companion(const Poly& t, const Poly& b, const Fq& F) {
    return Mat2{Poly{}, poly_neg(F, b), Poly::constant(1), t};
}

inline Poly mat2_trace(const Fq& F, const Mat2& m) { return poly_add(F, m[0], m[3]); }

inline Poly mat2_det(const Fq& F, const Mat2& m) {
    return poly_sub(F, poly_mul(F, m[0], m[3]), poly_mul(F, m[1], m[2]));
}

} // namespace hasse::oracle

#include <set>

#include "hasse/abelian.hpp"

namespace hasse::oracle {

// Exhaustive search for a surjective homomorphism between small finite
// abelian groups given by invariant factors.
inline bool surjection_exists_bruteforce(const AbGroupStruct& G, const AbGroupStruct& H) {
    if (G.free_rank != 0 || H.free_rank != 0)
        throw std::invalid_argument("brute-force surjection oracle handles finite groups only");
    const auto& dg = G.invariants;
    const auto& dh = H.invariants;
    // H elements as coordinate vectors
    std::vector<std::vector<std::uint64_t>> helems;
    {
        std::vector<std::uint64_t> cur(dh.size(), 0);
        while (true) {
            helems.push_back(cur);
            std::size_t i = 0;
            for (; i < dh.size(); ++i) {
                if (++cur[i] < to_u64(dh[i])) break;
                cur[i] = 0;
            }
            if (i == dh.size()) break;
            if (dh.empty()) break;
        }
    }
    if (dh.empty()) return true; // the trivial group is hit by anything
    auto add_vec = [&](std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % to_u64(dh[i]);
        return a;
    };
    auto order_of = [&](const std::vector<std::uint64_t>& v) {
        std::uint64_t o = 1;
        std::vector<std::uint64_t> cur = v;
        const std::vector<std::uint64_t> zero(dh.size(), 0);
        while (cur != zero) {
            cur = add_vec(cur, v);
            ++o;
        }
        return o;
    };
    // choose an image for every generator of G whose order divides d_i, and
    // test whether the chosen images generate H
    const std::size_t k = dg.size();
    std::vector<std::size_t> pick(k, 0);
    const std::uint64_t target = to_u64(H.torsion_order());
    while (true) {
        bool valid = true;
        for (std::size_t i = 0; i < k && valid; ++i)
            valid = to_u64(dg[i]) % order_of(helems[pick[i]]) == 0;
        if (valid) {
            std::set<std::vector<std::uint64_t>> span{std::vector<std::uint64_t>(dh.size(), 0)};
            bool grew = true;
            while (grew) {
                grew = false;
                for (std::size_t i = 0; i < k; ++i)
                    for (const auto& s : std::vector<std::vector<std::uint64_t>>(span.begin(), span.end())) {
                        auto t = add_vec(s, helems[pick[i]]);
                        if (span.insert(t).second) grew = true;
                    }
            }
            if (span.size() == target) return true;
        }
        std::size_t i = 0;
        for (; i < k; ++i) {
            if (++pick[i] < helems.size()) break;
            pick[i] = 0;
        }
        if (i == k) break;
    }
    return k == 0 ? dh.empty() : false;
}

} // namespace hasse::oracle
