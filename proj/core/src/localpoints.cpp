#include "hasse/localpoints.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace hasse {

Int genus_xd(const Fq& F, const PrimePoly& p, const PrimePoly& qp) {
    if (p == qp) throw std::invalid_argument("genus_xd: primes must be distinct");
    const Int q(F.q());
    const Int np = int_pow(q, static_cast<unsigned>(p.deg()));
    const Int nq = int_pow(q, static_cast<unsigned>(qp.deg()));
    const bool both_odd = (p.deg() % 2 == 1) && (qp.deg() % 2 == 1);
    // common denominator (q^2 - 1)(q + 1)
    const Int den = (q * q - 1) * (q + 1);
    Int num = den + (np - 1) * (nq - 1) * (q + 1);
    if (both_odd) num -= 2 * q * (q * q - 1);
    if (num % den != 0) throw std::logic_error("genus_xd: non-integral genus");
    return num / den;
}

namespace {

bool infinity_splits_in(const Fq& F, const Poly& m) {
    // infinity splits in F(sqrt(m)) iff deg m is even and lc(m) is a square
    return m.deg() % 2 == 0 && F.is_square_unit(m.lc());
}

} // namespace

LocalVerdict local_at_infinity(const Fq& F, const QuaternionD& D, const QuadExt& K) {
    (void)F;
    LocalVerdict v;
    v.place.at_infinity = true;
    v.in_k = K.infinity_type();
    if (K.infinity_type() != SplitType::Split) {
        v.nonempty = true;
    } else {
        // empty iff deg p or deg q is even
        v.nonempty = (D.p().deg() % 2 == 1) && (D.q().deg() % 2 == 1);
    }
    v.witness.kind = LocalWitness::Kind::Rule;
    return v;
}

LocalVerdict local_at_ramified(const Fq& F, const QuaternionD& D, const QuadExt& K,
                               const PrimePoly& v) {
    if (!(v == D.p()) && !(v == D.q()))
        throw std::invalid_argument("local_at_ramified: place does not ramify in D");
    const PrimePoly& other = v == D.p() ? D.q() : D.p();
    LocalVerdict out;
    out.place.prime = v.poly();
    out.in_k = place_split_type(K, v);
    out.witness.kind = LocalWitness::Kind::Rule;
    switch (out.in_k) {
        case SplitType::Inert:
            out.nonempty = true; // residual degree 2
            break;
        case SplitType::Split:
            out.nonempty = false;
            break;
        case SplitType::Ramified:
            // nonempty iff some mu makes both the other ramified prime and
            // infinity non-split in F(sqrt(mu v))
            out.nonempty = false;
            for (FqElem mu : F.units()) {
                const Poly m = poly_scale(F, v.poly(), mu);
                if (infinity_splits_in(F, m)) continue;
                if (legendre(F, m, other) == 1) continue;
                out.nonempty = true;
                out.witness.kind = LocalWitness::Kind::Mu;
                out.witness.mu = mu;
                break;
            }
            break;
    }
    return out;
}

LocalVerdict local_at_good(const Fq& F, const QuaternionD& D, const QuadExt& K,
                           const PrimePoly& l) {
    if (l == D.p() || l == D.q())
        throw std::invalid_argument("local_at_good: place ramifies in D");
    LocalVerdict out;
    out.place.prime = l.poly();
    out.witness.kind = LocalWitness::Kind::Rule;
    if (!F.odd()) {
        // inseparable quadratic extensions ramify everywhere: always solvable
        out.nonempty = true;
        return out;
    }
    out.in_k = place_split_type(K, l);
    if (out.in_k == SplitType::Inert) {
        out.nonempty = true; // residual degree 2
        return out;
    }
    const unsigned cutoff = 2 * static_cast<unsigned>(D.p().deg() + D.q().deg());
    if (static_cast<unsigned>(l.deg()) >= cutoff) {
        // point-count bound: q^deg + 1 - floor(2 g sqrt(q^deg)) > 0, exactly
        const Int g = genus_xd(F, D.p(), D.q());
        const Int ql = int_pow(Int(F.q()), static_cast<unsigned>(l.deg()));
        if (ql + 1 <= isqrt(4 * g * g * ql))
            throw std::logic_error("local_at_good: point-count bound fails at the cutoff");
        out.nonempty = true;
        out.witness.kind = LocalWitness::Kind::Cutoff;
        return out;
    }
    // Search a with deg a <= deg(l)/2 (larger a forces infinity to split) and
    // c a unit: m = a^2 + c l must avoid splitting at p, q and infinity.
    const int amax = l.deg() / 2;
    std::uint64_t count = 1;
    for (int i = 0; i <= amax; ++i) count *= F.q();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly a;
        a.c.assign(static_cast<std::size_t>(amax) + 1, 0);
        std::uint64_t rest = idx;
        for (int i = 0; i <= amax; ++i) {
            a.c[static_cast<std::size_t>(i)] = static_cast<FqElem>(rest % F.q());
            rest /= F.q();
        }
        a.trim();
        const Poly a2 = poly_mul(F, a, a);
        for (FqElem c : F.units()) {
            const Poly m = poly_add(F, a2, poly_scale(F, l.poly(), c));
            if (infinity_splits_in(F, m)) continue; // also discards perfect squares
            if (legendre(F, m, D.p()) == 1) continue;
            if (legendre(F, m, D.q()) == 1) continue;
            out.nonempty = true;
            out.witness.kind = LocalWitness::Kind::AC;
            out.witness.a = a;
            out.witness.c = c;
            return out;
        }
    }
    out.nonempty = false;
    return out;
}

bool verify_local_verdict(const Fq& F, const QuaternionD& D, const QuadExt& K,
                          const LocalVerdict& v) {
    if (v.place.at_infinity) {
        const LocalVerdict fresh = local_at_infinity(F, D, K);
        return fresh.nonempty == v.nonempty && fresh.in_k == v.in_k;
    }
    const PrimePoly place(F, v.place.prime);
    if (place_split_type(K, place) != v.in_k) return false;
    switch (v.witness.kind) {
        case LocalWitness::Kind::Mu: {
            if (!v.nonempty) return false;
            const PrimePoly& other = place == D.p() ? D.q() : D.p();
            const Poly m = poly_scale(F, place.poly(), v.witness.mu);
            return v.witness.mu != 0 && !infinity_splits_in(F, m) && legendre(F, m, other) != 1;
        }
        case LocalWitness::Kind::AC: {
            if (!v.nonempty) return false;
            const Poly m = poly_add(F, poly_mul(F, v.witness.a, v.witness.a),
                                    poly_scale(F, place.poly(), v.witness.c));
            return v.witness.c != 0 && !infinity_splits_in(F, m) &&
                   legendre(F, m, D.p()) != 1 && legendre(F, m, D.q()) != 1;
        }
        case LocalWitness::Kind::Cutoff: {
            const unsigned cutoff = 2 * static_cast<unsigned>(D.p().deg() + D.q().deg());
            return v.nonempty && static_cast<unsigned>(place.deg()) >= cutoff;
        }
        case LocalWitness::Kind::Rule: {
            // recompute the whole rule-based verdict
            if (place == D.p() || place == D.q())
                return local_at_ramified(F, D, K, place).nonempty == v.nonempty;
            return local_at_good(F, D, K, place).nonempty == v.nonempty;
        }
    }
    return false;
}

namespace {

struct ChunkResult {
    DegreeStats stats;
    std::vector<LocalVerdict> detailed;
};

} // namespace

LocalSweep local_everywhere(const Fq& F, const QuaternionD& D, const QuadExt& K,
                            unsigned detail_max_degree, unsigned threads) {
    LocalSweep sweep;
    sweep.cutoff_degree = 2 * static_cast<unsigned>(D.p().deg() + D.q().deg());
    {
        // the bound must hold at the cutoff (it is monotone in the degree)
        const Int g = genus_xd(F, D.p(), D.q());
        const Int ql = int_pow(Int(F.q()), sweep.cutoff_degree);
        if (ql + 1 <= isqrt(4 * g * g * ql))
            throw std::logic_error("local_everywhere: point-count bound fails at the cutoff");
    }
    sweep.infinity = local_at_infinity(F, D, K);
    sweep.ramified_d.push_back(local_at_ramified(F, D, K, D.p()));
    sweep.ramified_d.push_back(local_at_ramified(F, D, K, D.q()));

    bool ok = sweep.infinity.nonempty && sweep.ramified_d[0].nonempty && sweep.ramified_d[1].nonempty;

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    for (unsigned d = 1; d < sweep.cutoff_degree; ++d) {
        const std::vector<Poly>* primes = cached_monic_irreducibles(F, static_cast<int>(d));
        std::vector<bool> composite;
        if (!primes) composite = composite_sieve(F, static_cast<int>(d));
        std::uint64_t total = primes ? primes->size() : 1;
        if (!primes)
            for (unsigned i = 0; i < d; ++i) total *= F.q();
        const unsigned nchunks = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
        std::vector<ChunkResult> results(nchunks);
        auto work = [&](unsigned chunk) {
            ChunkResult& r = results[chunk];
            r.stats.degree = d;
            const std::uint64_t lo = total * chunk / nchunks;
            const std::uint64_t hi = total * (chunk + 1) / nchunks;
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                Poly w;
                if (primes) {
                    w = (*primes)[idx];
                } else {
                    if (composite[idx]) continue;
                    w = poly_from_index(F, static_cast<int>(d), idx);
                }
                if (w == D.p().poly() || w == D.q().poly()) continue;
                r.stats.primes++;
                const PrimePoly l = PrimePoly::unchecked(w);
                const SplitType st = place_split_type(K, l);
                if (st == SplitType::Inert) {
                    r.stats.inert++;
                    continue;
                }
                if (st == SplitType::Split)
                    r.stats.split++;
                else
                    r.stats.ramified++;
                LocalVerdict v = local_at_good(F, D, K, l);
                if (!v.nonempty) r.stats.empty++;
                if (!v.nonempty || st == SplitType::Ramified || d <= detail_max_degree)
                    r.detailed.push_back(std::move(v));
            }
        };
        if (nchunks == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned c = 0; c < nchunks; ++c) pool.emplace_back(work, c);
            for (auto& t : pool) t.join();
        }
        DegreeStats agg;
        agg.degree = d;
        for (auto& r : results) {
            agg.primes += r.stats.primes;
            agg.split += r.stats.split;
            agg.ramified += r.stats.ramified;
            agg.inert += r.stats.inert;
            agg.empty += r.stats.empty;
            for (auto& v : r.detailed) sweep.detailed.push_back(std::move(v));
        }
        if (agg.empty > 0) ok = false;
        sweep.stats.push_back(agg);
    }
    sweep.all_nonempty = ok;
    return sweep;
}

} // namespace hasse
