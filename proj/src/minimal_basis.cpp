#include "polyrank/minimal_basis.hpp"

#include <algorithm>
#include <numeric>

#include "polyrank/errors.hpp"
#include "polyrank/smith.hpp"

namespace polyrank {

namespace {

// Canonical form of a column-reduced matrix, keeping m = reduced * cofactor
// in sync: scale each column so the leading coefficient of its first nonzero
// entry is 1, then sort columns by (degree, entry order).
void canonicalize_columns(PolyMatrix& m, PolyMatrix& cof) {
    const int n = m.cols();
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m.rows(); ++i) {
            if (m.at(i, j).is_zero()) continue;
            Rational lead = m.at(i, j).leading();
            if (!lead.is_one()) {
                m.scale_col(j, lead.reciprocal());
                cof.scale_row(j, lead);
            }
            break;
        }
    }
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    auto col_less = [&m](int a, int b) {
        auto da = Degree::neg_inf(), db = Degree::neg_inf();
        for (int i = 0; i < m.rows(); ++i) {
            da = std::max(da, m.at(i, a).degree());
            db = std::max(db, m.at(i, b).degree());
        }
        if (da != db) return da < db;
        for (int i = 0; i < m.rows(); ++i) {
            auto c = poly_order(m.at(i, a), m.at(i, b));
            if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        }
        return false;
    };
    std::stable_sort(order.begin(), order.end(), col_less);
    PolyMatrix m2(m.rows(), n, 0), cof2(cof.rows(), cof.cols(), 0);
    for (int k = 0; k < n; ++k) {
        m2.set_column(k, m.column(order[static_cast<size_t>(k)]));
        cof2.set_row(k, cof.row(order[static_cast<size_t>(k)]));
    }
    m = m2;
    cof = cof2;
}

std::vector<int> finite_profile(const PolyMatrix& m, Orientation o) {
    std::vector<int> out;
    for (const Degree& d : m.degree_profile(o)) {
        ensure(d.is_finite(), "basis vector collapsed to zero");
        out.push_back(d.value());
    }
    return out;
}

} // namespace

ColumnReduceResult column_reduce(const PolyMatrix& input) {
    const int n = input.cols();
    if (n == 0) return {input, PolyMatrix::identity(0)};

    {
        std::vector<Poly> inv = invariant_polynomials(input);
        require(static_cast<int>(inv.size()) == n, "column reduction needs full column rank");
        for (const Poly& e : inv)
            require(e.is_one(),
                    "column reduction needs full column rank at every point; invariant polynomial " +
                        e.to_display() + " vanishes somewhere");
    }

    PolyMatrix m = input;
    PolyMatrix cof = PolyMatrix::identity(n);

    long guard = 0;
    const long guard_limit = 16L + 4L * static_cast<long>(n) * (input.grade() + 2);
    while (true) {
        ensure(++guard < guard_limit, "column reduction failed to terminate");
        std::vector<Degree> prof = m.degree_profile(Orientation::Columns);
        for (const Degree& d : prof) ensure(d.is_finite(), "column collapsed to zero during reduction");
        auto x_opt = m.highest_coeff(Orientation::Columns).null_vector();
        if (!x_opt) break;
        const std::vector<Rational>& x = *x_opt;

        // target: the largest-index column of maximal degree in the support
        int target = -1;
        for (int i = 0; i < n; ++i) {
            if (x[static_cast<size_t>(i)].is_zero()) continue;
            if (target < 0 || prof[static_cast<size_t>(i)] >= prof[static_cast<size_t>(target)]) target = i;
        }
        ensure(target >= 0, "null vector without support");
        const int dt = prof[static_cast<size_t>(target)].value();

        // replace the target column by sum_i x_i * x^(dt - d_i) * col_i; the
        // leading coefficients cancel by construction, so its degree drops
        std::vector<Poly> newcol(static_cast<size_t>(m.rows()), Poly::zero());
        for (int i = 0; i < n; ++i) {
            if (x[static_cast<size_t>(i)].is_zero()) continue;
            int shift = dt - prof[static_cast<size_t>(i)].value();
            ensure(shift >= 0, "support column above the target degree");
            for (int row = 0; row < m.rows(); ++row)
                newcol[static_cast<size_t>(row)] +=
                    m.at(row, i).scaled(x[static_cast<size_t>(i)]).shifted(shift);
        }
        Degree nd = Degree::neg_inf();
        for (const Poly& p : newcol) nd = std::max(nd, p.degree());
        ensure(nd < Degree::of(dt), "replacement did not lower the column degree");
        m.set_column(target, newcol);

        // cofactor update: the replacement is a right-multiplication by
        // T = I with column `target` set to (x_i x^(dt - d_i)); keeping
        // cof = T^{-1} * previous_cof means subtracting multiples of the old
        // target row from every other row, then rescaling the target row
        const Rational xt = x[static_cast<size_t>(target)];
        ensure(!xt.is_zero(), "target column outside the null vector support");
        const std::vector<Poly> told = cof.row(target);
        for (int i = 0; i < n; ++i) {
            if (i == target || x[static_cast<size_t>(i)].is_zero()) continue;
            int shift = dt - prof[static_cast<size_t>(i)].value();
            Poly f = Poly::monomial(shift, x[static_cast<size_t>(i)] / xt);
            std::vector<Poly> ri = cof.row(i);
            for (int c = 0; c < n; ++c) ri[static_cast<size_t>(c)] -= f * told[static_cast<size_t>(c)];
            cof.set_row(i, ri);
        }
        if (!xt.is_one()) cof.scale_row(target, xt.reciprocal());
    }

    canonicalize_columns(m, cof);
    ensure(m.is_reduced(Orientation::Columns), "result is not column reduced");
    ensure(cof.is_unimodular(), "cofactor is not unimodular");
    ensure(m.multiply(cof).same_entries(input), "reduction does not reproduce the input");
    return {m, cof};
}

RowReduceResult row_reduce(const PolyMatrix& m) {
    ColumnReduceResult t = column_reduce(m.transpose());
    return {t.reduced.transpose(), t.cofactor.transpose()};
}

bool is_minimal_basis(const PolyMatrix& m, Orientation o) {
    int vectors = o == Orientation::Columns ? m.cols() : m.rows();
    if (vectors == 0) return true;
    if (!m.is_reduced(o)) return false;
    std::vector<Poly> inv = invariant_polynomials(m);
    if (static_cast<int>(inv.size()) != vectors) return false;
    for (const Poly& e : inv)
        if (!e.is_one()) return false;
    return true;
}

namespace {

MinimalBasis reduce_to_basis_columns(const PolyMatrix& vectors) {
    ColumnReduceResult r = column_reduce(vectors);
    MinimalBasis b{r.reduced, Orientation::Columns, finite_profile(r.reduced, Orientation::Columns)};
    ensure(std::is_sorted(b.degrees.begin(), b.degrees.end()), "canonical basis degrees must ascend");
    ensure(is_minimal_basis(b.matrix, Orientation::Columns), "reduced spanning set is not a minimal basis");
    return b;
}

} // namespace

MinimalBasis col_space_minimal_basis(const PolyMatrix& p) {
    SmithExtended s = smith_decompose_extended(p);
    require(s.rank >= 1, "column space basis needs normal rank at least 1");
    return reduce_to_basis_columns(s.u.select_columns(0, s.rank));
}

MinimalBasis row_space_minimal_basis(const PolyMatrix& p) {
    SmithExtended s = smith_decompose_extended(p);
    require(s.rank >= 1, "row space basis needs normal rank at least 1");
    MinimalBasis cols = reduce_to_basis_columns(s.v.select_rows(0, s.rank).transpose());
    return {cols.matrix.transpose(), Orientation::Rows, cols.degrees};
}

MinimalBasis right_nullspace_minimal_basis(const PolyMatrix& p) {
    SmithExtended s = smith_decompose_extended(p);
    const int n = p.cols();
    if (s.rank == n) {
        MinimalBasis b{PolyMatrix(n, 0, 0), Orientation::Columns, {}};
        return b;
    }
    MinimalBasis b = reduce_to_basis_columns(s.v_inv.select_columns(s.rank, n - s.rank));
    ensure(p.multiply(b.matrix).is_zero(), "right nullspace basis fails to annihilate");
    return b;
}

MinimalBasis left_nullspace_minimal_basis(const PolyMatrix& p) {
    SmithExtended s = smith_decompose_extended(p);
    const int m = p.rows();
    if (s.rank == m) {
        MinimalBasis b{PolyMatrix(0, m, 0), Orientation::Rows, {}};
        return b;
    }
    MinimalBasis cols = reduce_to_basis_columns(s.u_inv.select_rows(s.rank, m - s.rank).transpose());
    MinimalBasis b{cols.matrix.transpose(), Orientation::Rows, cols.degrees};
    ensure(b.matrix.multiply(p).is_zero(), "left nullspace basis fails to annihilate");
    return b;
}

MinimalIndices minimal_indices(const PolyMatrix& p) {
    MinimalIndices out;
    const int r = smith_decompose_extended(p).rank;
    out.left_nullspace = left_nullspace_minimal_basis(p).degrees;
    out.right_nullspace = right_nullspace_minimal_basis(p).degrees;
    if (r >= 1) {
        out.row_space = row_space_minimal_basis(p).degrees;
        out.col_space = col_space_minimal_basis(p).degrees;
    }
    auto total = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
    ensure(total(out.left_nullspace) == total(out.col_space),
           "left nullspace and column space index sums must agree");
    ensure(total(out.right_nullspace) == total(out.row_space),
           "right nullspace and row space index sums must agree");
    return out;
}

} // namespace polyrank
