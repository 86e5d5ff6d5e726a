#pragma once

#include <optional>
#include <vector>

#include "polyrank/minimal_basis.hpp"
#include "polyrank/poly_matrix.hpp"

namespace polyrank {

enum class FactorKind {
    SmithRank, // L = U[:, :r], E = diag invariants, R = V[:r, :]
    LcER,      // column-reduced L, row-reduced R, middle factor carries the invariants
    LcR,       // column-reduced L, two factors
    LRr,       // row-reduced R, two factors
};

struct RankFactorization {
    FactorKind kind;
    PolyMatrix l;                // m x r
    std::optional<PolyMatrix> e; // r x r, present for SmithRank and LcER
    PolyMatrix r;                // r x n
};

// Requires normal rank >= 1.
RankFactorization smith_rank_factorization(const PolyMatrix& p);
RankFactorization minimal_rank_factorization(const PolyMatrix& p, FactorKind kind);

struct FactorizationReport {
    bool product_ok;
    bool l_minimal;
    bool r_minimal;
    bool l_column_reduced;
    bool r_row_reduced;
    std::vector<Degree> column_degrees; // of L
    std::vector<Degree> row_degrees;    // of R
    // max over expansion terms of deg L_{*i} (+ deg e_ij) + deg R_{j*}
    Degree predictable_degree = Degree::neg_inf();
    bool predictable_matches_degree; // == deg(P)
    // per inner index i: deg L_{*i} + deg R_{i*} equals the grade of P
    std::vector<bool> degree_sum_matches_grade;
};

// Kind-agnostic checks of an arbitrary candidate factorization; accepts
// factor matrices that did not come from this library.
FactorizationReport verify_factorization(const PolyMatrix& p, const PolyMatrix& l,
                                         const std::optional<PolyMatrix>& e, const PolyMatrix& r);

// Largest row-space index plus largest column-space index; every
// factorization of the matrix has degree at least this.  Requires rank >= 1.
int degree_lower_bound(const PolyMatrix& p);

} // namespace polyrank
