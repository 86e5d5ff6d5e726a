#include "polyrank/const_matrix.hpp"

#include <utility>

#include "polyrank/errors.hpp"

namespace polyrank {

ConstMatrix::ConstMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    require(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
    e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rational(0));
}

size_t ConstMatrix::idx(int i, int j) const {
    ensure(i >= 0 && i < rows_ && j >= 0 && j < cols_, "matrix index out of range");
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
}

ConstMatrix ConstMatrix::identity(int n) {
    ConstMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

ConstMatrix ConstMatrix::multiply(const ConstMatrix& o) const {
    ensure(cols_ == o.rows_, "matrix product shape mismatch");
    ConstMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

ConstMatrix ConstMatrix::rref() const {
    ConstMatrix a = *this;
    int lead = 0;
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
        int pivot = -1;
        for (int i = lead; i < rows_; ++i) {
            if (!a.at(i, col).is_zero()) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int j = 0; j < cols_; ++j) std::swap(a.at(pivot, j), a.at(lead, j));
        Rational inv = a.at(lead, col).reciprocal();
        for (int j = 0; j < cols_; ++j) a.at(lead, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == lead || a.at(i, col).is_zero()) continue;
            Rational f = a.at(i, col);
            for (int j = 0; j < cols_; ++j) a.at(i, j) -= f * a.at(lead, j);
        }
        ++lead;
    }
    return a;
}

int ConstMatrix::rank() const {
    ConstMatrix r = rref();
    int rk = 0;
    for (int i = 0; i < rows_; ++i) {
        bool nonzero = false;
        for (int j = 0; j < cols_; ++j)
            if (!r.at(i, j).is_zero()) { nonzero = true; break; }
        if (nonzero) ++rk;
    }
    return rk;
}

std::optional<std::vector<Rational>> ConstMatrix::null_vector() const {
    ConstMatrix r = rref();
    // pivot column of each nonzero row, in order
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (!r.at(i, j).is_zero()) {
                pivot_col.push_back(j);
                is_pivot[static_cast<size_t>(j)] = true;
                break;
            }
        }
    }
    int free_col = -1;
    for (int j = 0; j < cols_; ++j)
        if (!is_pivot[static_cast<size_t>(j)]) { free_col = j; break; }
    if (free_col < 0) return std::nullopt;
    std::vector<Rational> x(static_cast<size_t>(cols_), Rational(0));
    x[static_cast<size_t>(free_col)] = Rational(1);
    for (size_t i = 0; i < pivot_col.size(); ++i)
        x[static_cast<size_t>(pivot_col[i])] = -r.at(static_cast<int>(i), free_col);
    return x;
}

Rational ConstMatrix::determinant() const {
    ensure(rows_ == cols_, "determinant of a non-square matrix");
    ConstMatrix a = *this;
    Rational det(1);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int i = col; i < rows_; ++i)
            if (!a.at(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            det = -det;
        }
        det *= a.at(col, col);
        Rational inv = a.at(col, col).reciprocal();
        for (int i = col + 1; i < rows_; ++i) {
            if (a.at(i, col).is_zero()) continue;
            Rational f = a.at(i, col) * inv;
            for (int j = col; j < cols_; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return det;
}

} // namespace polyrank
