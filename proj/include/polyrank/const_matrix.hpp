#pragma once

#include <optional>
#include <vector>

#include "polyrank/rational.hpp"

namespace polyrank {

// Dense matrix of rationals.  Elimination routines use the first nonzero
// candidate as pivot (scanning rows top-down, columns left to right), so all
// results are deterministic functions of the input.
class ConstMatrix {
public:
    ConstMatrix(int rows, int cols);
    static ConstMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int i, int j) const { return e_[idx(i, j)]; }
    Rational& at(int i, int j) { return e_[idx(i, j)]; }

    ConstMatrix multiply(const ConstMatrix& o) const;

    // Reduced row echelon form.
    ConstMatrix rref() const;
    int rank() const;
    // A nonzero right null vector if one exists: the canonical solution with
    // free value 1 in the first non-pivot column.
    std::optional<std::vector<Rational>> null_vector() const;
    Rational determinant() const; // square only

    friend bool operator==(const ConstMatrix& a, const ConstMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    size_t idx(int i, int j) const;
    int rows_, cols_;
    std::vector<Rational> e_;
};

} // namespace polyrank
