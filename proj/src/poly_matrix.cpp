#include "polyrank/poly_matrix.hpp"

#include <algorithm>
#include <utility>

#include "polyrank/errors.hpp"

namespace polyrank {

PolyMatrix::PolyMatrix(int rows, int cols, int grade) : rows_(rows), cols_(cols), grade_(grade) {
    require(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
    require(grade >= 0, "grade must be nonnegative");
    e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Poly::zero());
}

size_t PolyMatrix::idx(int i, int j) const {
    ensure(i >= 0 && i < rows_ && j >= 0 && j < cols_, "matrix index out of range");
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n, 0);
    for (int i = 0; i < n; ++i) m.set(i, i, Poly::one());
    return m;
}

PolyMatrix PolyMatrix::from_rows(int rows, int cols, std::vector<Poly> row_major) {
    require(static_cast<size_t>(rows) * static_cast<size_t>(cols) == row_major.size(),
            "entry count does not match matrix shape");
    PolyMatrix m(rows, cols, 0);
    m.e_ = std::move(row_major);
    for (const auto& p : m.e_) m.raise_grade_to_fit(p);
    return m;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<Poly>>& rows) {
    require(!rows.empty(), "at least one row required");
    int n = static_cast<int>(rows.front().size());
    std::vector<Poly> flat;
    for (const auto& r : rows) {
        require(static_cast<int>(r.size()) == n, "ragged rows");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return from_rows(static_cast<int>(rows.size()), n, std::move(flat));
}

PolyMatrix PolyMatrix::diagonal(const std::vector<Poly>& d) {
    return diagonal_embed(static_cast<int>(d.size()), static_cast<int>(d.size()), d);
}

PolyMatrix PolyMatrix::diagonal_embed(int rows, int cols, const std::vector<Poly>& d) {
    require(static_cast<int>(d.size()) <= std::min(rows, cols), "too many diagonal entries");
    PolyMatrix m(rows, cols, 0);
    for (size_t i = 0; i < d.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), d[i]);
    return m;
}

void PolyMatrix::raise_grade_to_fit(const Poly& p) {
    if (!p.is_zero()) grade_ = std::max(grade_, p.degree().value());
}

void PolyMatrix::set(int i, int j, Poly p) {
    raise_grade_to_fit(p);
    e_[idx(i, j)] = std::move(p);
}

PolyMatrix PolyMatrix::with_grade(int g) const {
    Degree d = degree();
    require(g >= 0 && Degree::of(g) >= d, "grade must cover the actual degree");
    PolyMatrix m = *this;
    m.grade_ = g;
    return m;
}

Degree PolyMatrix::degree() const {
    Degree d = Degree::neg_inf();
    for (const auto& p : e_) d = std::max(d, p.degree());
    return d;
}

std::vector<Degree> PolyMatrix::degree_profile(Orientation o) const {
    std::vector<Degree> out;
    if (o == Orientation::Columns) {
        for (int j = 0; j < cols_; ++j) {
            Degree d = Degree::neg_inf();
            for (int i = 0; i < rows_; ++i) d = std::max(d, at(i, j).degree());
            out.push_back(d);
        }
    } else {
        for (int i = 0; i < rows_; ++i) {
            Degree d = Degree::neg_inf();
            for (int j = 0; j < cols_; ++j) d = std::max(d, at(i, j).degree());
            out.push_back(d);
        }
    }
    return out;
}

ConstMatrix PolyMatrix::highest_coeff(Orientation o) const {
    ConstMatrix out(rows_, cols_);
    std::vector<Degree> prof = degree_profile(o);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Degree& d = prof[static_cast<size_t>(o == Orientation::Columns ? j : i)];
            if (d.is_finite()) out.at(i, j) = at(i, j).coeff(d.value());
        }
    return out;
}

bool PolyMatrix::is_reduced(Orientation o) const {
    for (const Degree& d : degree_profile(o))
        if (!d.is_finite()) return false; // a zero line can never be reduced
    ConstMatrix hc = highest_coeff(o);
    int want = o == Orientation::Columns ? cols_ : rows_;
    return hc.rank() == want;
}

// Fraction-free (Bareiss) elimination.  Entries stay polynomial throughout:
// every division by the previous pivot is exact.  Pivots are chosen as the
// first nonzero entry of the trailing submatrix in row-major order.
namespace {
struct BareissResult {
    int rank;
    Poly det; // valid only when the matrix is square
};

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divrem(a, b);
    ensure(r.is_zero(), "fraction-free elimination produced a non-exact division");
    return q;
}

BareissResult bareiss(const PolyMatrix& input) {
    PolyMatrix a = input;
    const int m = a.rows(), n = a.cols();
    Poly prev = Poly::one();
    int sign = 1;
    int k = 0;
    for (; k < std::min(m, n); ++k) {
        int pi = -1, pj = -1;
        for (int i = k; i < m && pi < 0; ++i)
            for (int j = k; j < n; ++j)
                if (!a.at(i, j).is_zero()) { pi = i; pj = j; break; }
        if (pi < 0) break;
        if (pi != k) { a.swap_rows(pi, k); sign = -sign; }
        if (pj != k) { a.swap_cols(pj, k); sign = -sign; }
        for (int i = k + 1; i < m; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                a.set(i, j, exact_div(num, prev));
            }
            a.set(i, k, Poly::zero());
        }
        prev = a.at(k, k);
    }
    BareissResult res;
    res.rank = k;
    if (m == n)
        res.det = (k == n) ? (sign < 0 ? -a.at(n - 1, n - 1) : a.at(n - 1, n - 1)) : Poly::zero();
    return res;
}
} // namespace

int PolyMatrix::normal_rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return bareiss(*this).rank;
}

Poly PolyMatrix::determinant() const {
    require(rows_ == cols_, "determinant of a non-square matrix");
    if (rows_ == 0) return Poly::one();
    return bareiss(*this).det;
}

bool PolyMatrix::is_unimodular() const {
    if (rows_ != cols_) return false;
    Poly d = determinant();
    return !d.is_zero() && d.is_constant();
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(cols_, rows_, grade_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.e_[out.idx(j, i)] = at(i, j);
    return out;
}

PolyMatrix PolyMatrix::multiply(const PolyMatrix& o) const {
    require(cols_ == o.rows_, "matrix product shape mismatch");
    PolyMatrix out(rows_, o.cols_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                out.set(i, j, out.at(i, j) + at(i, k) * o.at(k, j));
            }
        }
    // Cancellation can leave the accumulated grade above the finished
    // entries; the product's grade is its actual degree (0 when zero).
    Degree dg = out.degree();
    out.grade_ = dg.is_finite() ? dg.value() : 0;
    return out;
}

PolyMatrix PolyMatrix::add(const PolyMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
    PolyMatrix out(rows_, cols_, std::max(grade_, o.grade_));
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

PolyMatrix PolyMatrix::sub(const PolyMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
    PolyMatrix out(rows_, cols_, std::max(grade_, o.grade_));
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

PolyMatrix PolyMatrix::scaled(const Poly& p) const {
    PolyMatrix out(rows_, cols_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j) * p);
    return out;
}

PolyMatrix PolyMatrix::select_columns(int first, int count) const {
    require(first >= 0 && count >= 0 && first + count <= cols_, "column selection out of range");
    PolyMatrix out(rows_, count, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < count; ++j) out.set(i, j, at(i, first + j));
    return out;
}

PolyMatrix PolyMatrix::select_rows(int first, int count) const {
    require(first >= 0 && count >= 0 && first + count <= rows_, "row selection out of range");
    PolyMatrix out(count, cols_, 0);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(first + i, j));
    return out;
}

PolyMatrix PolyMatrix::hcat(const PolyMatrix& o) const {
    require(rows_ == o.rows_, "horizontal concatenation needs equal row counts");
    PolyMatrix out(rows_, cols_ + o.cols_, 0);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
        for (int j = 0; j < o.cols_; ++j) out.set(i, cols_ + j, o.at(i, j));
    }
    return out;
}

std::vector<Poly> PolyMatrix::column(int j) const {
    std::vector<Poly> out;
    for (int i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return out;
}

std::vector<Poly> PolyMatrix::row(int i) const {
    std::vector<Poly> out;
    for (int j = 0; j < cols_; ++j) out.push_back(at(i, j));
    return out;
}

void PolyMatrix::set_column(int j, const std::vector<Poly>& col) {
    require(static_cast<int>(col.size()) == rows_, "column length mismatch");
    for (int i = 0; i < rows_; ++i) set(i, j, col[static_cast<size_t>(i)]);
}

void PolyMatrix::set_row(int i, const std::vector<Poly>& row) {
    require(static_cast<int>(row.size()) == cols_, "row length mismatch");
    for (int j = 0; j < cols_; ++j) set(i, j, row[static_cast<size_t>(j)]);
}

void PolyMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(e_[idx(i, c)], e_[idx(j, c)]);
}

void PolyMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(e_[idx(r, i)], e_[idx(r, j)]);
}

void PolyMatrix::axpy_row(int i, int j, const Poly& q) {
    ensure(i != j, "row update must use two distinct rows");
    for (int c = 0; c < cols_; ++c) set(i, c, at(i, c) + q * at(j, c));
}

void PolyMatrix::axpy_col(int j, int i, const Poly& q) {
    ensure(i != j, "column update must use two distinct columns");
    for (int r = 0; r < rows_; ++r) set(r, j, at(r, j) + q * at(r, i));
}

void PolyMatrix::scale_row(int i, const Rational& c) {
    for (int j = 0; j < cols_; ++j) set(i, j, at(i, j).scaled(c));
}

void PolyMatrix::scale_col(int j, const Rational& c) {
    for (int i = 0; i < rows_; ++i) set(i, j, at(i, j).scaled(c));
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMatrix::same_entries(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Rational pm_distance_sq(const PolyMatrix& a, const PolyMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "distance needs equal shapes");
    Rational acc(0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Poly d = a.at(i, j) - b.at(i, j);
            for (const Rational& c : d.coeffs()) acc += c * c;
        }
    return acc;
}

} // namespace polyrank
