#pragma once

#include <vector>

#include "polyrank/poly_matrix.hpp"

namespace polyrank {

// m = reduced * cofactor, with cofactor unimodular and reduced
// column-reduced, normalized and sorted canonically.
struct ColumnReduceResult {
    PolyMatrix reduced;
    PolyMatrix cofactor;
};

// m = cofactor * reduced (transpose dual of column reduction).
struct RowReduceResult {
    PolyMatrix reduced;
    PolyMatrix cofactor;
};

// Requires every point evaluation of m to have full column rank (checked via
// the invariant polynomials).  Degrees only ever decrease.
ColumnReduceResult column_reduce(const PolyMatrix& m);
RowReduceResult row_reduce(const PolyMatrix& m);

// Reduced in the given orientation and all invariant polynomials equal 1.
bool is_minimal_basis(const PolyMatrix& m, Orientation o);

struct MinimalBasis {
    PolyMatrix matrix;       // basis vectors as columns (or rows)
    Orientation orientation;
    std::vector<int> degrees; // ascending
};

MinimalBasis col_space_minimal_basis(const PolyMatrix& p);   // requires rank >= 1
MinimalBasis row_space_minimal_basis(const PolyMatrix& p);   // requires rank >= 1
MinimalBasis right_nullspace_minimal_basis(const PolyMatrix& p);
MinimalBasis left_nullspace_minimal_basis(const PolyMatrix& p);

struct MinimalIndices {
    std::vector<int> left_nullspace;   // m - r entries
    std::vector<int> right_nullspace;  // n - r entries
    std::vector<int> row_space;        // r entries
    std::vector<int> col_space;        // r entries
};

MinimalIndices minimal_indices(const PolyMatrix& p);

} // namespace polyrank
