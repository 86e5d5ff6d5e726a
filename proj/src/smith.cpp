#include "polyrank/smith.hpp"

#include <algorithm>

#include "polyrank/errors.hpp"

namespace polyrank {

namespace {

// Working state: A is reduced to Smith form by elementary operations while
// U, V absorb their inverses so that U * A * V stays equal to the input, and
// u_inv, v_inv absorb the operations themselves.
struct Accumulator {
    PolyMatrix a, u, v, u_inv, v_inv;

    explicit Accumulator(const PolyMatrix& p)
        : a(p),
          u(PolyMatrix::identity(p.rows())),
          v(PolyMatrix::identity(p.cols())),
          u_inv(PolyMatrix::identity(p.rows())),
          v_inv(PolyMatrix::identity(p.cols())) {}

    void row_swap(int i, int j) {
        a.swap_rows(i, j);
        u.swap_cols(i, j);
        u_inv.swap_rows(i, j);
    }
    // row_i += q * row_j
    void row_axpy(int i, int j, const Poly& q) {
        a.axpy_row(i, j, q);
        u.axpy_col(j, i, -q);
        u_inv.axpy_row(i, j, q);
    }
    void row_scale(int i, const Rational& c) {
        a.scale_row(i, c);
        u.scale_col(i, c.reciprocal());
        u_inv.scale_row(i, c);
    }
    void col_swap(int i, int j) {
        a.swap_cols(i, j);
        v.swap_rows(i, j);
        v_inv.swap_cols(i, j);
    }
    // col_j += q * col_i
    void col_axpy(int j, int i, const Poly& q) {
        a.axpy_col(j, i, q);
        v.axpy_row(i, j, -q);
        v_inv.axpy_col(j, i, q);
    }
};

// Pivot: nonzero entry of minimal degree in the trailing submatrix, ties
// broken by (row, column) order.
bool find_pivot(const PolyMatrix& a, int k, int& pi, int& pj) {
    pi = pj = -1;
    Degree best = Degree::neg_inf();
    for (int i = k; i < a.rows(); ++i)
        for (int j = k; j < a.cols(); ++j) {
            const Poly& p = a.at(i, j);
            if (p.is_zero()) continue;
            if (pi < 0 || p.degree() < best) {
                best = p.degree();
                pi = i;
                pj = j;
            }
        }
    return pi >= 0;
}

} // namespace

SmithExtended smith_decompose_extended(const PolyMatrix& p) {
    Accumulator acc(p);
    const int m = p.rows(), n = p.cols();
    const int mn = std::min(m, n);

    int k = 0;
    long steps = 0;
    // generous bound: every re-entry either isolates a pivot or strictly
    // lowers the minimal degree in the trailing submatrix
    const long step_limit = 64L + 16L * (static_cast<long>(m) + n) * (p.grade() + 2);
    while (k < mn) {
        ensure(++steps < step_limit, "reduction failed to terminate");
        int pi, pj;
        if (!find_pivot(acc.a, k, pi, pj)) break;
        if (pi != k) acc.row_swap(k, pi);
        if (pj != k) acc.col_swap(k, pj);

        // clear below the pivot; a nonzero remainder has strictly smaller
        // degree and forces pivot re-selection
        bool dirty = false;
        for (int i = k + 1; i < m; ++i) {
            if (acc.a.at(i, k).is_zero()) continue;
            auto [q, r] = poly_divrem(acc.a.at(i, k), acc.a.at(k, k));
            acc.row_axpy(i, k, -q);
            if (!r.is_zero()) dirty = true;
        }
        if (dirty) continue;
        for (int j = k + 1; j < n; ++j) {
            if (acc.a.at(k, j).is_zero()) continue;
            auto [q, r] = poly_divrem(acc.a.at(k, j), acc.a.at(k, k));
            acc.col_axpy(j, k, -q);
            if (!r.is_zero()) dirty = true;
        }
        if (dirty) continue;

        // pivot is isolated; enforce divisibility over the trailing block
        bool fixed = false;
        for (int i = k + 1; i < m && !fixed; ++i)
            for (int j = k + 1; j < n && !fixed; ++j) {
                if (acc.a.at(i, j).is_zero()) continue;
                if (!poly_divrem(acc.a.at(i, j), acc.a.at(k, k)).second.is_zero()) {
                    acc.col_axpy(k, j, Poly::one());
                    fixed = true;
                }
            }
        if (fixed) continue;

        if (!acc.a.at(k, k).is_monic())
            acc.row_scale(k, acc.a.at(k, k).leading().reciprocal());
        ++k;
    }

    SmithExtended out{acc.u, acc.v, acc.u_inv, acc.v_inv, {}, k};
    for (int i = 0; i < k; ++i) out.invariants.push_back(acc.a.at(i, i));

    // invariants of the construction
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && i < k)
                ensure(acc.a.at(i, j) == out.invariants[static_cast<size_t>(i)], "diagonal drifted from invariants");
            else
                ensure(acc.a.at(i, j).is_zero(), "reduction left a stray nonzero entry");
        }
    for (int i = 0; i + 1 < k; ++i)
        ensure(poly_divrem(out.invariants[static_cast<size_t>(i) + 1], out.invariants[static_cast<size_t>(i)])
                   .second.is_zero(),
               "invariant divisibility chain broken");
    for (const Poly& e : out.invariants) ensure(e.is_monic(), "invariant polynomial is not monic");
    ensure(out.u.multiply(out.u_inv).same_entries(PolyMatrix::identity(m)), "left transformation inverse mismatch");
    ensure(out.v_inv.multiply(out.v).same_entries(PolyMatrix::identity(n)), "right transformation inverse mismatch");
    ensure(out.u.multiply(out.s(m, n)).multiply(out.v).same_entries(p), "decomposition does not reproduce the input");
    ensure(out.u.is_unimodular() && out.v.is_unimodular(), "transformation is not unimodular");
    return out;
}

SmithDecomposition smith_decompose(const PolyMatrix& p) {
    SmithExtended e = smith_decompose_extended(p);
    return SmithDecomposition{e.u, e.v, e.invariants, e.rank};
}

std::vector<Poly> invariant_polynomials(const PolyMatrix& p) {
    return smith_decompose_extended(p).invariants;
}

std::vector<int> partial_multiplicities_at(const PolyMatrix& p, const Rational& alpha) {
    const Poly root = Poly(std::vector<Rational>{-alpha, Rational(1)}); // x - alpha
    std::vector<int> out;
    for (Poly e : invariant_polynomials(p)) {
        int mult = 0;
        while (true) {
            auto [q, r] = poly_divrem(e, root);
            if (!r.is_zero()) break;
            e = q;
            ++mult;
        }
        out.push_back(mult);
    }
    ensure(std::is_sorted(out.begin(), out.end()), "partial multiplicities must ascend");
    return out;
}

std::vector<int> partial_multiplicities_at_infinity(const PolyMatrix& p) {
    PolyMatrix rev(p.rows(), p.cols(), p.grade());
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j) rev.set(i, j, poly_reverse(p.at(i, j), p.grade()));
    std::vector<int> out = partial_multiplicities_at(rev, Rational(0));
    if (!out.empty())
        ensure(out.front() == p.grade() - p.degree().value(),
               "leading multiplicity at infinity must equal the grade slack");
    return out;
}

} // namespace polyrank
