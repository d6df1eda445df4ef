#include "hasse/factor.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hasse {

namespace {

std::vector<unsigned> prime_divisors_of(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// T^(q^k) mod f for k = 0, 1, ..., via repeated q-th powers of the previous
// value. Returns the sequence element requested.
Poly frobenius_iterate(const Fq& F, Poly h, unsigned steps, const Poly& f) {
    for (unsigned i = 0; i < steps; ++i) h = poly_powmod(F, h, F.q(), f);
    return h;
}

} // namespace

bool is_irreducible(const Fq& F, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_irreducible: zero input");
    if (f.deg() < 1) throw std::invalid_argument("is_irreducible: constant input");
    const Poly m = poly_monic(F, f);
    const unsigned n = static_cast<unsigned>(m.deg());
    if (n == 1) return true;
    const Poly x = Poly::term(1, 1);
    // Full power first: T^(q^n) must equal T mod f.
    Poly h = frobenius_iterate(F, poly_mod(F, x, m), n, m);
    if (poly_cmp(h, poly_mod(F, x, m)) != 0) return false;
    for (unsigned t : prime_divisors_of(n)) {
        Poly g = frobenius_iterate(F, poly_mod(F, x, m), n / t, m);
        Poly d = poly_gcd(F, poly_sub(F, g, x), m);
        if (!d.is_one()) return false;
    }
    return true;
}

namespace {

// Distinct-degree splitting of a monic square-free input.
void ddf(const Fq& F, Poly f, std::vector<std::pair<Poly, unsigned>>& out) {
    const Poly x = Poly::term(1, 1);
    Poly h = poly_mod(F, x, f);
    unsigned d = 0;
    while (f.deg() > 0 && 2 * (d + 1) <= static_cast<unsigned>(f.deg())) {
        ++d;
        h = poly_powmod(F, h, F.q(), f);
        Poly g = poly_gcd(F, poly_sub(F, h, x), f);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = poly_div_exact(F, f, g);
            h = poly_mod(F, h, f);
        }
    }
    if (f.deg() > 0) out.emplace_back(f, static_cast<unsigned>(f.deg()));
}

// Equal-degree splitting (Cantor-Zassenhaus, odd q): f is a product of
// r >= 1 distinct irreducibles of degree d.
void edf(const Fq& F, const Poly& f, unsigned d, Rng& rng, std::vector<Poly>& out) {
    if (static_cast<unsigned>(f.deg()) == d) {
        out.push_back(f);
        return;
    }
    if (F.q() == 2) throw std::domain_error("factorize: equal-degree split requires odd q");
    while (true) {
        Poly a;
        a.c.resize(static_cast<std::size_t>(f.deg()));
        for (auto& ci : a.c) ci = static_cast<FqElem>(rng.below(F.q()));
        a.trim();
        if (a.deg() < 1) continue;
        Poly g = poly_gcd(F, a, f);
        if (!g.is_one() && g.deg() < f.deg()) {
            edf(F, g, d, rng, out);
            edf(F, poly_div_exact(F, f, g), d, rng, out);
            return;
        }
        // b = a^((q^d - 1)/2) = (prod_{i<d} a^(q^i))^((q-1)/2), all small exponents.
        Poly prod = poly_mod(F, a, f);
        Poly c = prod;
        for (unsigned i = 1; i < d; ++i) {
            c = poly_powmod(F, c, F.q(), f);
            prod = poly_mod(F, poly_mul(F, prod, c), f);
        }
        Poly b = poly_powmod(F, prod, (F.q() - 1) / 2, f);
        Poly split = poly_gcd(F, poly_sub(F, b, Poly::constant(1)), f);
        if (!split.is_one() && split.deg() < f.deg()) {
            edf(F, split, d, rng, out);
            edf(F, poly_div_exact(F, f, split), d, rng, out);
            return;
        }
    }
}

// Square-free decomposition in characteristic p = q (q prime), Yun-style.
void squarefree_decompose(const Fq& F, const Poly& f, unsigned outer_mult,
                          std::vector<std::pair<Poly, unsigned>>& out) {
    Poly fp = poly_derivative(F, f);
    if (fp.is_zero()) {
        // f = g(T^p) = g(T)^p since the coefficient field is F_p.
        Poly g;
        g.c.resize(f.c.size() / F.q() + 1, 0);
        for (std::size_t i = 0; i * F.q() < f.c.size(); ++i) g.c[i] = f.c[i * F.q()];
        g.trim();
        squarefree_decompose(F, g, outer_mult * F.q(), out);
        return;
    }
    Poly c = poly_gcd(F, f, fp);
    Poly w = poly_div_exact(F, f, c);
    unsigned i = 1;
    while (w.deg() > 0) {
        Poly y = poly_gcd(F, w, c);
        Poly fac = poly_div_exact(F, w, y);
        if (fac.deg() > 0) out.emplace_back(fac, outer_mult * i);
        w = std::move(y);
        c = poly_div_exact(F, c, w);
        ++i;
    }
    if (c.deg() > 0) squarefree_decompose(F, c, outer_mult, out);
}

} // namespace

Factorization factorize(const Fq& F, const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("factorize: zero input");
    Factorization result;
    result.unit = f.lc();
    if (f.deg() < 1) return result;
    const Poly m = poly_monic(F, f);
    Rng rng(seed);

    std::vector<std::pair<Poly, unsigned>> squarefree_parts;
    squarefree_decompose(F, m, 1, squarefree_parts);

    std::map<std::vector<FqElem>, unsigned> merged;
    for (const auto& [part, mult] : squarefree_parts) {
        std::vector<std::pair<Poly, unsigned>> by_degree;
        ddf(F, part, by_degree);
        for (const auto& [prod, d] : by_degree) {
            std::vector<Poly> primes;
            edf(F, prod, d, rng, primes);
            for (auto& p : primes) merged[p.c] += mult;
        }
    }
    for (auto& [coeffs, mult] : merged)
        result.factors.push_back(PolyFactor{Poly(std::vector<FqElem>(coeffs)), mult});
    std::sort(result.factors.begin(), result.factors.end(),
              [](const PolyFactor& a, const PolyFactor& b) { return poly_cmp(a.prime, b.prime) < 0; });
    return result;
}

bool is_squarefree(const Fq& F, const Poly& f) {
    if (f.is_zero()) return false;
    if (f.deg() < 1) return true;
    Poly fp = poly_derivative(F, f);
    if (fp.is_zero()) return false;
    return poly_gcd(F, f, fp).is_one();
}

Poly radical(const Fq& F, const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("radical: zero input");
    if (f.deg() < 1) return Poly::constant(1);
    if (is_squarefree(F, f)) return poly_monic(F, f);
    Poly r = Poly::constant(1);
    for (const auto& fac : factorize(F, f, seed).factors) r = poly_mul(F, r, fac.prime);
    return r;
}

void for_each_monic_irreducible(const Fq& F, int d,
                                const std::function<bool(const Poly&)>& fn) {
    if (d < 1) throw std::invalid_argument("for_each_monic_irreducible: degree must be >= 1");
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= F.q();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly p = poly_from_index(F, d, idx);
        if (d > 1 && p.c[0] == 0) continue; // divisible by T
        if (!is_irreducible(F, p)) continue;
        if (!fn(p)) return;
    }
}

std::vector<Poly> list_monic_irreducibles(const Fq& F, int d) {
    std::vector<Poly> out;
    for_each_monic_irreducible(F, d, [&](const Poly& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

std::vector<bool> composite_sieve(const Fq& F, int d) {
    if (d < 1) throw std::invalid_argument("composite_sieve: degree must be >= 1");
    const std::uint64_t q = F.q();
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) {
        if (total > (1ull << 34)) throw std::overflow_error("composite_sieve: degree too large");
        total *= q;
    }
    std::vector<bool> composite(total, false);
    std::vector<FqElem> prod(static_cast<std::size_t>(d) + 1);
    for (int k = 1; 2 * k <= d; ++k) {
        const std::vector<Poly>* primes = cached_monic_irreducibles(F, k);
        std::vector<Poly> local;
        if (!primes) {
            local = list_monic_irreducibles(F, k);
            primes = &local;
        }
        const int hd = d - k;
        std::uint64_t hcount = 1;
        for (int i = 0; i < hd; ++i) hcount *= q;
        std::vector<FqElem> h(static_cast<std::size_t>(hd) + 1);
        h[static_cast<std::size_t>(hd)] = 1;
        for (const Poly& g : *primes) {
            for (std::uint64_t idx = 0; idx < hcount; ++idx) {
                std::uint64_t rest = idx;
                for (int i = 0; i < hd; ++i) {
                    h[static_cast<std::size_t>(i)] = static_cast<FqElem>(rest % q);
                    rest /= q;
                }
                std::fill(prod.begin(), prod.end(), 0);
                for (int i = 0; i <= k; ++i) {
                    const FqElem gi = g.coeff(static_cast<std::size_t>(i));
                    if (gi == 0) continue;
                    for (int j = 0; j <= hd; ++j)
                        prod[static_cast<std::size_t>(i + j)] = F.add(
                            prod[static_cast<std::size_t>(i + j)],
                            F.mul(gi, h[static_cast<std::size_t>(j)]));
                }
                std::uint64_t pidx = 0;
                for (int i = d - 1; i >= 0; --i) pidx = pidx * q + prod[static_cast<std::size_t>(i)];
                composite[pidx] = true;
            }
        }
    }
    return composite;
}

const std::vector<Poly>* cached_monic_irreducibles(const Fq& F, int d) {
    std::uint64_t size = 1;
    for (int i = 0; i < d; ++i) {
        size *= F.q();
        if (size > 200000) return nullptr;
    }
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, int>, std::unique_ptr<std::vector<Poly>>> cache;
    const auto key = std::make_pair(F.q(), d);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second.get();
    }
    auto fresh = std::make_unique<std::vector<Poly>>(list_monic_irreducibles(F, d));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(key, std::move(fresh));
    return it->second.get();
}

} // namespace hasse
