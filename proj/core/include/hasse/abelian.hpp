#pragma once

#include <vector>

#include "hasse/integer.hpp"

namespace hasse {

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank x Z/d_1 x ... x Z/d_k with d_1 | d_2 | ... | d_k, d_i >= 2.
struct AbGroupStruct {
    unsigned free_rank = 0;
    std::vector<Int> invariants;

    Int torsion_order() const {
        Int t = 1;
        for (const Int& d : invariants) t *= d;
        return t;
    }
    bool operator==(const AbGroupStruct& o) const {
        return free_rank == o.free_rank && invariants == o.invariants;
    }
};

// Canonical form from an arbitrary list of cyclic orders (drops 1s, restores
// the divisibility chain).
AbGroupStruct abelian_from_cyclic_orders(unsigned free_rank, std::vector<Int> orders);

// Direct product, renormalized to invariant factors.
AbGroupStruct abelian_product(const AbGroupStruct& a, const AbGroupStruct& b);

// Smith normal form of the integer matrix A (rows x cols). Returns the
// diagonal d_1 | d_2 | ... (non-negative). If row_inv is non-null it receives
// W = U^{-1} for the accumulated row transform U (D = U A V), so that the
// quotient Z^rows / colspace(A) has independent generators
// b_i = sum_j W[j][i] g_j of order D[i].
std::vector<Int> smith_normal_form(std::vector<std::vector<Int>> A,
                                   std::vector<std::vector<Int>>* row_inv = nullptr);

// Existence of a surjective homomorphism G ->> H: free_rank(G) >= free_rank(H)
// and for every prime power l^k the number of components of G with order
// divisible by l^k (free components count always) is at least the same count
// for H.
bool can_surject(const AbGroupStruct& G, const AbGroupStruct& H);

} // namespace hasse
