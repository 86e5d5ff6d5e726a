#pragma once

#include <vector>

#include "polyrank/poly_matrix.hpp"

// Hand-checked matrices shared across the suites.  Every builder returns a
// fresh copy so tests can mutate freely.  The factorizations stated in the
// comments were verified by hand and are re-verified by the tests that use
// them, so a transcription slip cannot survive unnoticed.

namespace fixtures {

using polyrank::Poly;
using polyrank::PolyMatrix;
using polyrank::Rational;

inline Poly lam(int k, long c = 1) { return Poly::monomial(k, Rational(c)); }
inline Poly num(long c) { return Poly::constant(Rational(c)); }
inline Poly zp() { return Poly::zero(); }

// 3x3, grade 8, normal rank 2, invariant polynomials (1, lambda^11).
inline PolyMatrix smith_fixture() {
    return PolyMatrix::from_rows({
        {lam(8), zp(), zp()},
        {lam(6) + num(1), lam(7, -1), lam(5, -1)},
        {num(1), lam(7, -1), lam(5, -1)},
    });
}

// One unimodular U with U * diag(1, lambda^11, 0) * V = smith_fixture().
inline PolyMatrix smith_fixture_u() {
    return PolyMatrix::from_rows({
        {lam(8), lam(2), num(1)},
        {lam(6) + num(1), num(1), zp()},
        {num(1), zp(), zp()},
    });
}

inline PolyMatrix smith_fixture_v() {
    return PolyMatrix::from_rows({
        {num(1), lam(7, -1), lam(5, -1)},
        {zp(), lam(2), num(1)},
        {zp(), num(1), zp()},
    });
}

// Rank factorization smith_fixture() = L * E * R cut out of the Smith form.
// L and R are not minimal bases: their highest-coefficient matrices are
// rank deficient.
inline PolyMatrix rankfact_l() {
    return PolyMatrix::from_rows({
        {lam(8), lam(2)},
        {lam(6) + num(1), num(1)},
        {num(1), zp()},
    });
}

inline PolyMatrix rankfact_e() {
    return PolyMatrix::diagonal({num(1), lam(11)});
}

inline PolyMatrix rankfact_r() {
    return PolyMatrix::from_rows({
        {num(1), lam(7, -1), lam(5, -1)},
        {zp(), lam(2), num(1)},
    });
}

// rankfact_l() = reduced_lc() * unimodular_v2(): the column-reduced factor
// is a minimal basis of the column space, with column degrees (0, 2).
inline PolyMatrix reduced_lc() {
    return PolyMatrix::from_rows({
        {zp(), lam(2)},
        {num(1), num(1)},
        {num(1), zp()},
    });
}

inline PolyMatrix unimodular_v2() {
    return PolyMatrix::from_rows({
        {num(1), zp()},
        {lam(6), num(1)},
    });
}

// rankfact_r() = unimodular_u2() * reduced_rr(): the row-reduced factor is
// a minimal basis of the row space, with row degrees (0, 2).
inline PolyMatrix unimodular_u2() {
    return PolyMatrix::from_rows({
        {num(1), lam(5, -1)},
        {zp(), num(1)},
    });
}

inline PolyMatrix reduced_rr() {
    return PolyMatrix::from_rows({
        {num(1), zp(), zp()},
        {zp(), lam(2), num(1)},
    });
}

// Three displayed minimal rank factorizations of smith_fixture():
//   reduced_lc() * middle_f() * reduced_rr()        (three factors)
//   reduced_lc() * twofact_r()                      (two factors, left reduced)
//   twofact_l() * reduced_rr()                      (two factors, right reduced)
inline PolyMatrix middle_f() {
    return PolyMatrix::from_rows({
        {num(1), lam(5, -1)},
        {lam(6), zp()},
    });
}

inline PolyMatrix twofact_r() {
    return PolyMatrix::from_rows({
        {num(1), lam(7, -1), lam(5, -1)},
        {lam(6), zp(), zp()},
    });
}

inline PolyMatrix twofact_l() {
    return PolyMatrix::from_rows({
        {lam(8), zp()},
        {lam(6) + num(1), lam(5, -1)},
        {num(1), lam(5, -1)},
    });
}

// 3x3, grade 6, rank 2, no finite or infinite eigenvalues.  Its minimal
// rank factorization gap_l() * gap_r() has per-index degree sums 6, yet the
// largest row index plus the largest column index is 9: no factorization of
// degree below 9 can have minimal bases on both sides.
inline PolyMatrix gap_fixture() {
    return PolyMatrix::from_rows({
        {lam(6), lam(5), zp()},
        {lam(1), lam(6) + num(1), lam(2)},
        {zp(), lam(4), num(1)},
    });
}

inline PolyMatrix gap_l() {
    return PolyMatrix::from_rows({
        {lam(5), zp()},
        {num(1), lam(2)},
        {zp(), num(1)},
    });
}

inline PolyMatrix gap_r() {
    return PolyMatrix::from_rows({
        {lam(1), num(1), zp()},
        {zp(), lam(4), num(1)},
    });
}

// A second factorization of gap_fixture() whose factors are full rank but
// not reduced, so degree sums alone do not certify minimality.
inline PolyMatrix gap_tall_l() {
    return PolyMatrix::from_rows({
        {lam(5), zp()},
        {lam(7) + num(1), lam(2)},
        {lam(5), num(1)},
    });
}

inline PolyMatrix gap_tall_r() {
    return PolyMatrix::from_rows({
        {lam(1), num(1), zp()},
        {lam(6, -1), lam(5, -1) + lam(4), num(1)},
    });
}

// 3x3, grade 2, rank 2.  redist_l() * redist_r() is a factorization with
// equal per-index degree sums and right row degrees (2, 0); moving one
// degree unit between the rows lands on the homogeneous profile (1, 1).
inline PolyMatrix redist_fixture() {
    return PolyMatrix::from_rows({
        {lam(2), zp(), zp()},
        {num(1), lam(2), num(1)},
        {zp(), lam(2), num(1)},
    });
}

inline PolyMatrix redist_l() {
    return PolyMatrix::from_rows({
        {zp(), lam(2)},
        {num(1), num(1)},
        {num(1), zp()},
    });
}

inline PolyMatrix redist_r() {
    return PolyMatrix::from_rows({
        {zp(), lam(2), num(1)},
        {num(1), zp(), zp()},
    });
}

// 4x4, grade 4, rank 2.  Has the generic eigenvalue-free structure with
// index sums (2,2)/(2,2) even though its factorization below has the very
// inhomogeneous degree split (4,0)/(0,4).
inline PolyMatrix orbit_fixture() {
    return PolyMatrix::from_rows({
        {zp(), zp(), num(1), num(1)},
        {zp(), zp(), lam(2), lam(2)},
        {num(1), lam(2), lam(4, 2), lam(4)},
        {num(1), lam(2), lam(4), zp()},
    });
}

inline PolyMatrix orbit_l() {
    return PolyMatrix::from_rows({
        {num(1), zp()},
        {lam(2), zp()},
        {lam(4), num(1)},
        {zp(), num(1)},
    });
}

inline PolyMatrix orbit_r() {
    return PolyMatrix::from_rows({
        {zp(), zp(), num(1), num(1)},
        {num(1), lam(2), lam(4), zp()},
    });
}

// Dual pair annihilating orbit_fixture(): the columns of orbit_null_l()
// are a minimal basis of its right nullspace and the rows of
// orbit_null_r() of its left nullspace, both with degrees (2, 2).
inline PolyMatrix orbit_null_l() {
    return PolyMatrix::from_rows({
        {lam(2), zp()},
        {num(-1), lam(2)},
        {zp(), num(-1)},
        {zp(), num(1)},
    });
}

inline PolyMatrix orbit_null_r() {
    return PolyMatrix::from_rows({
        {lam(2), num(-1), zp(), zp()},
        {zp(), lam(2), num(-1), num(1)},
    });
}

// orbit_null_l() * orbit_null_r(): 4x4, grade 4, rank 2, eigenvalue free,
// with homogeneous row and column space indices (2,2)/(2,2) but nullspace
// indices (0,4)/(0,4), so it does not have the generic structure.
inline PolyMatrix profile_fixture() {
    return orbit_null_l().multiply(orbit_null_r()).with_grade(4);
}

}  // namespace fixtures
