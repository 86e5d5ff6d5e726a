#pragma once

#include <optional>
#include <vector>

#include "polyrank/poly_matrix.hpp"

namespace polyrank {

// The complete spectral data of a matrix carried at its grade: invariant
// polynomials (finite structure), multiplicities at infinity, and the
// minimal indices of both nullspaces.
struct Eigenstructure {
    int rank;
    int grade;
    std::vector<Poly> invariants;    // length rank
    std::vector<int> inf_mults;      // length rank, ascending
    std::vector<int> left_indices;   // m - rank entries, ascending
    std::vector<int> right_indices;  // n - rank entries, ascending
};

Eigenstructure complete_eigenstructure(const PolyMatrix& p);

// No finite eigenvalues (all invariants 1) and no infinite ones (all
// multiplicities at infinity 0).
bool is_eigenvalue_free(const PolyMatrix& p);

// Eigenvalue-free generic structure with right index sum a: left and right
// minimal index lists are as homogeneous as the counts allow.
struct GenericOrbitSpec {
    int a;
    int alpha, s; // right indices: s copies of alpha+1, rest alpha
    int beta, t;  // left indices: t copies of beta+1, rest beta
    std::vector<int> right_indices; // ascending
    std::vector<int> left_indices;  // ascending
};

// Requires m, n >= 2, d >= 1, 1 <= r < min(m, n), 0 <= a <= r*d.
GenericOrbitSpec generic_orbit_spec(int m, int n, int d, int r, int a);

// Generic structure of full-normal-rank matrices.  For m == n the generic
// matrix is regular (no index lists); the tag records that.
struct FullRankGenericSpec {
    bool regular;                   // m == n
    std::vector<int> right_indices; // nonempty only when m < n
    std::vector<int> left_indices;  // nonempty only when m > n
};

// Requires m, n >= 1, d >= 1.
FullRankGenericSpec full_rank_generic_spec(int m, int n, int d);

// The index sum a such that p has exactly the generic eigenvalue-free
// structure for (m, n, grade, r, a), if any.  There is at most one
// candidate: the sum of the right minimal indices.
std::optional<int> classify_orbit(const PolyMatrix& p, int r);

} // namespace polyrank
