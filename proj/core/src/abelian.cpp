#include "hasse/abelian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hasse {

AbGroupStruct abelian_from_cyclic_orders(unsigned free_rank, std::vector<Int> orders) {
    std::vector<Int> cleaned;
    for (Int& d : orders) {
        if (d < 1) throw std::invalid_argument("abelian_from_cyclic_orders: nonpositive order");
        if (d > 1) cleaned.push_back(d);
    }
    if (cleaned.empty()) return AbGroupStruct{free_rank, {}};
    // Normalize via the prime decomposition: per prime, sort exponents and
    // right-align so the largest exponents multiply together.
    std::map<std::uint64_t, std::vector<unsigned>> per_prime;
    for (const Int& d : cleaned)
        for (const auto& [p, e] : factor_integer(d)) per_prime[p].push_back(e);
    std::size_t k = 0;
    for (auto& [p, es] : per_prime) {
        std::sort(es.begin(), es.end());
        k = std::max(k, es.size());
    }
    std::vector<Int> inv(k, 1);
    for (auto& [p, es] : per_prime) {
        for (std::size_t i = 0; i < es.size(); ++i)
            inv[k - es.size() + i] *= int_pow(Int(p), es[i]);
    }
    return AbGroupStruct{free_rank, std::move(inv)};
}

AbGroupStruct abelian_product(const AbGroupStruct& a, const AbGroupStruct& b) {
    std::vector<Int> orders = a.invariants;
    orders.insert(orders.end(), b.invariants.begin(), b.invariants.end());
    return abelian_from_cyclic_orders(a.free_rank + b.free_rank, std::move(orders));
}

namespace {

void add_col_multiple(std::vector<std::vector<Int>>& W, std::size_t dst, std::size_t src,
                      const Int& k) {
    for (auto& row : W) row[dst] += k * row[src];
}

} // namespace

std::vector<Int> smith_normal_form(std::vector<std::vector<Int>> A,
                                   std::vector<std::vector<Int>>* row_inv) {
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : 0;
    std::vector<std::vector<Int>> W;
    if (row_inv) {
        W.assign(m, std::vector<Int>(m, 0));
        for (std::size_t i = 0; i < m; ++i) W[i][i] = 1;
    }
    // Row op A <- E A tracks W <- W E^{-1} so W stays the inverse transform.
    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(A[i], A[j]);
        if (row_inv)
            for (auto& row : W) std::swap(row[i], row[j]);
    };
    auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& k) {
        // row_dst -= k row_src   =>   col_src += k col_dst in W
        for (std::size_t j = 0; j < n; ++j) A[dst][j] -= k * A[src][j];
        if (row_inv) add_col_multiple(W, src, dst, k);
    };
    auto row_negate = [&](std::size_t i) {
        for (auto& x : A[i]) x = -x;
        if (row_inv)
            for (auto& row : W) row[i] = -row[i];
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (auto& row : A) std::swap(row[i], row[j]);
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& k) {
        for (auto& row : A) row[dst] -= k * row[src];
    };

    const std::size_t r = std::min(m, n);
    for (std::size_t t = 0; t < r; ++t) {
        // Find the nonzero entry of least absolute value in the trailing block.
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (A[i][j] == 0) continue;
                Int v = abs(A[i][j]);
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (A[i][t] == 0) continue;
                Int q = A[i][t] / A[t][t];
                row_axpy(i, t, q);
                if (A[i][t] != 0) {
                    // remainder smaller than pivot: swap up and restart
                    row_swap(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (A[t][j] == 0) continue;
                Int q = A[t][j] / A[t][t];
                col_axpy(j, t, q);
                if (A[t][j] != 0) {
                    col_swap(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Pivot must divide the rest of the block.
            for (std::size_t i = t + 1; i < m && clean; ++i)
                for (std::size_t j = t + 1; j < n && clean; ++j) {
                    if (A[i][j] % A[t][t] != 0) {
                        row_axpy(t, i, Int(-1)); // row_t += row_i
                        clean = false;
                    }
                }
        }
        if (A[t][t] < 0) row_negate(t);
    }
    std::vector<Int> diag(r, 0);
    for (std::size_t t = 0; t < r; ++t) diag[t] = A[t][t];
    if (row_inv) *row_inv = std::move(W);
    return diag;
}

bool can_surject(const AbGroupStruct& G, const AbGroupStruct& H) {
    if (G.free_rank < H.free_rank) return false;
    std::map<std::uint64_t, unsigned> max_exp;
    for (const Int& d : H.invariants)
        for (const auto& [p, e] : factor_integer(d)) max_exp[p] = std::max(max_exp[p], e);
    for (const auto& [p, emax] : max_exp) {
        for (unsigned k = 1; k <= emax; ++k) {
            const Int pk = int_pow(Int(p), k);
            unsigned cg = G.free_rank, ch = H.free_rank;
            for (const Int& d : G.invariants)
                if (d % pk == 0) ++cg;
            for (const Int& d : H.invariants)
                if (d % pk == 0) ++ch;
            if (cg < ch) return false;
        }
    }
    return true;
}

} // namespace hasse
