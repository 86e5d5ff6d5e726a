#pragma once

#include <vector>

#include "polyrank/const_matrix.hpp"
#include "polyrank/poly.hpp"

namespace polyrank {

enum class Orientation { Columns, Rows };

// Polynomial matrix carried at an explicit grade: a formal degree bound that
// is part of the object's identity and always >= the actual degree of every
// entry.  Mutating operations raise the grade when an entry outgrows it;
// shrinking is only possible through the explicit with_grade copy.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, int grade);
    static PolyMatrix identity(int n);
    static PolyMatrix zero(int rows, int cols, int grade) { return PolyMatrix(rows, cols, grade); }
    // Builds from row-major entries; grade = max entry degree (at least 0).
    static PolyMatrix from_rows(int rows, int cols, std::vector<Poly> row_major);
    static PolyMatrix from_rows(const std::vector<std::vector<Poly>>& rows);
    // r x r diagonal with the given entries.
    static PolyMatrix diagonal(const std::vector<Poly>& d);
    // m x n rectangular embedding of a diagonal (Smith shape).
    static PolyMatrix diagonal_embed(int rows, int cols, const std::vector<Poly>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int grade() const { return grade_; }

    const Poly& at(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, Poly p);

    // Copy at a different grade; g must be >= the actual degree (so a grade
    // may grow freely, or shrink exactly to the actual degree).
    PolyMatrix with_grade(int g) const;

    Degree degree() const; // max entry degree; -inf when zero
    Degree entry_degree(int i, int j) const { return at(i, j).degree(); }

    std::vector<Degree> degree_profile(Orientation o) const;
    // Highest-degree coefficient matrix: per column (or row), the coefficient
    // vector at that column's (row's) own degree; zero lines give zero lines.
    ConstMatrix highest_coeff(Orientation o) const;
    bool is_reduced(Orientation o) const;

    int normal_rank() const;      // fraction-free elimination
    Poly determinant() const;     // square only, fraction-free
    bool is_unimodular() const;   // square with constant nonzero determinant

    PolyMatrix transpose() const;
    PolyMatrix multiply(const PolyMatrix& o) const;
    PolyMatrix add(const PolyMatrix& o) const;
    PolyMatrix sub(const PolyMatrix& o) const;
    PolyMatrix scaled(const Poly& p) const;

    PolyMatrix select_columns(int first, int count) const;
    PolyMatrix select_rows(int first, int count) const;
    PolyMatrix hcat(const PolyMatrix& o) const;

    std::vector<Poly> column(int j) const;
    std::vector<Poly> row(int i) const;
    void set_column(int j, const std::vector<Poly>& col);
    void set_row(int i, const std::vector<Poly>& row);

    // In-place elementary operations (grade raised as needed).
    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void axpy_row(int i, int j, const Poly& q);    // row_i += q * row_j
    void axpy_col(int j, int i, const Poly& q);    // col_j += q * col_i
    void scale_row(int i, const Rational& c);
    void scale_col(int j, const Rational& c);

    bool is_zero() const;
    // Entry-wise equality ignoring the stored grades.
    bool same_entries(const PolyMatrix& o) const;
    // Structural equality: shape, grade and entries.
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.grade_ == b.grade_ && a.e_ == b.e_;
    }

private:
    size_t idx(int i, int j) const;
    void raise_grade_to_fit(const Poly& p);
    int rows_, cols_, grade_;
    std::vector<Poly> e_;
};

// Exact squared distance: sum over all coefficient positions of the squared
// entry-wise differences, taken in the common grade max(a.grade, b.grade).
Rational pm_distance_sq(const PolyMatrix& a, const PolyMatrix& b);

} // namespace polyrank
