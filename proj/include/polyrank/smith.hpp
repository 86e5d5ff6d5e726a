#pragma once

#include <vector>

#include "polyrank/poly_matrix.hpp"

namespace polyrank {

// P = U * S * V with U, V unimodular and S the diagonal embedding of the
// monic invariant polynomials e_1 | e_2 | ... | e_r.
struct SmithDecomposition {
    PolyMatrix u;
    PolyMatrix v;
    std::vector<Poly> invariants;
    int rank;
};

// Same, carrying the inverses of the transformations (accumulated alongside
// them while the elementary operations are replayed, never by a separate
// matrix inversion).
struct SmithExtended {
    PolyMatrix u;
    PolyMatrix v;
    PolyMatrix u_inv;
    PolyMatrix v_inv;
    std::vector<Poly> invariants;
    int rank;

    PolyMatrix s(int rows, int cols) const { return PolyMatrix::diagonal_embed(rows, cols, invariants); }
};

SmithExtended smith_decompose_extended(const PolyMatrix& p);
SmithDecomposition smith_decompose(const PolyMatrix& p);

std::vector<Poly> invariant_polynomials(const PolyMatrix& p);

// Multiplicity sequence of (x - alpha) across the invariant polynomials;
// length = normal rank, ascending.
std::vector<int> partial_multiplicities_at(const PolyMatrix& p, const Rational& alpha);

// Multiplicities at infinity: the sequence at 0 of the grade-reversal
// x^grade * P(1/x).  The first entry always equals grade - deg(P).
std::vector<int> partial_multiplicities_at_infinity(const PolyMatrix& p);

} // namespace polyrank
