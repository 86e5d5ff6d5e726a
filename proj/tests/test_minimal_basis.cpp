#include <doctest.h>

#include <numeric>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "polyrank/errors.hpp"
#include "polyrank/minimal_basis.hpp"
#include "polyrank/sampling.hpp"
#include "polyrank/smith.hpp"

using namespace fixtures;
using polyrank::Degree;
using polyrank::MinimalBasis;
using polyrank::MinimalIndices;
using polyrank::Orientation;
using polyrank::PolyMatrix;
using polyrank::SampleStream;

namespace {

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::vector<int> finite_profile(const PolyMatrix& m, Orientation o) {
    std::vector<int> out;
    for (const Degree& d : m.degree_profile(o)) out.push_back(d.value());
    return out;
}

}  // namespace

TEST_CASE("column reduction of the collapsing left factor") {
    PolyMatrix l = rankfact_l();
    auto res = polyrank::column_reduce(l);
    CHECK(res.reduced.is_reduced(Orientation::Columns));
    CHECK(res.cofactor.is_unimodular());
    CHECK(res.reduced.multiply(res.cofactor).same_entries(l));
    CHECK(finite_profile(res.reduced, Orientation::Columns) == std::vector<int>{0, 2});
}

TEST_CASE("row reduction of the collapsing right factor") {
    PolyMatrix r = rankfact_r();
    auto res = polyrank::row_reduce(r);
    CHECK(res.reduced.is_reduced(Orientation::Rows));
    CHECK(res.cofactor.is_unimodular());
    CHECK(res.cofactor.multiply(res.reduced).same_entries(r));
    CHECK(finite_profile(res.reduced, Orientation::Rows) == std::vector<int>{0, 2});
}

TEST_CASE("reduction only ever lowers degrees") {
    SampleStream gen(8080);
    int done = 0;
    for (int t = 0; t < 60 && done < 20; ++t) {
        PolyMatrix m = oracles::random_matrix(gen, 3, 2, 2, 2);
        if (polyrank::invariant_polynomials(m) !=
            std::vector<polyrank::Poly>{polyrank::Poly::one(), polyrank::Poly::one()})
            continue;  // column reduction needs full column rank at every point
        ++done;
        auto res = polyrank::column_reduce(m);
        CHECK(res.reduced.multiply(res.cofactor).same_entries(m));
        CHECK(res.reduced.is_reduced(Orientation::Columns));
        CHECK((res.reduced.degree() <= m.degree()));
        auto before = m.degree_profile(Orientation::Columns);
        auto after = res.reduced.degree_profile(Orientation::Columns);
        int sum_before = 0, sum_after = 0;
        for (const Degree& d : before) sum_before += d.value();
        for (const Degree& d : after) sum_after += d.value();
        CHECK(sum_after <= sum_before);
    }
    CHECK(done > 0);
}

TEST_CASE("column reduction rejects matrices with a nontrivial invariant") {
    // lambda * I drops rank at zero, so no unimodular cofactor can fix it.
    PolyMatrix bad = PolyMatrix::from_rows({{lam(1), zp()}, {zp(), lam(1)}, {zp(), zp()}});
    CHECK_THROWS_AS(polyrank::column_reduce(bad), polyrank::input_error);
}

TEST_CASE("minimality verdicts for the displayed factor pairs") {
    CHECK_FALSE(polyrank::is_minimal_basis(rankfact_l(), Orientation::Columns));
    CHECK_FALSE(polyrank::is_minimal_basis(rankfact_r(), Orientation::Rows));
    CHECK(polyrank::is_minimal_basis(reduced_lc(), Orientation::Columns));
    CHECK(polyrank::is_minimal_basis(reduced_rr(), Orientation::Rows));
    CHECK(polyrank::is_minimal_basis(gap_l(), Orientation::Columns));
    CHECK(polyrank::is_minimal_basis(gap_r(), Orientation::Rows));
    // Full rank everywhere but not reduced: still not minimal.
    CHECK_FALSE(polyrank::is_minimal_basis(gap_tall_l(), Orientation::Columns));
    CHECK_FALSE(polyrank::is_minimal_basis(gap_tall_r(), Orientation::Rows));
    // Reduced but rank-dropping at zero.
    PolyMatrix pinched = PolyMatrix::from_rows({{lam(1), zp()}, {zp(), num(1)}, {zp(), zp()}});
    CHECK(pinched.is_reduced(Orientation::Columns));
    CHECK_FALSE(polyrank::is_minimal_basis(pinched, Orientation::Columns));
}

TEST_CASE("nullspace bases annihilate and are minimal") {
    PolyMatrix p = orbit_fixture();
    MinimalBasis right = polyrank::right_nullspace_minimal_basis(p);
    CHECK(right.orientation == Orientation::Columns);
    CHECK(p.multiply(right.matrix).is_zero());
    CHECK(polyrank::is_minimal_basis(right.matrix, Orientation::Columns));
    CHECK(right.degrees == std::vector<int>{2, 2});

    MinimalBasis left = polyrank::left_nullspace_minimal_basis(p);
    CHECK(left.orientation == Orientation::Rows);
    CHECK(left.matrix.multiply(p).is_zero());
    CHECK(polyrank::is_minimal_basis(left.matrix, Orientation::Rows));
    CHECK(left.degrees == std::vector<int>{2, 2});

    // The annihilating pair in the fixture set is one valid answer; the
    // computed bases must share its index lists.
    CHECK(p.multiply(orbit_null_l()).is_zero());
    CHECK(orbit_null_r().multiply(p).is_zero());
}

TEST_CASE("nullspaces of the swapped product have very uneven indices") {
    PolyMatrix q = profile_fixture();
    CHECK(polyrank::right_nullspace_minimal_basis(q).degrees == std::vector<int>{0, 4});
    CHECK(polyrank::left_nullspace_minimal_basis(q).degrees == std::vector<int>{0, 4});
    CHECK(q.multiply(orbit_l()).is_zero());
}

TEST_CASE("full-rank matrices have empty nullspaces") {
    PolyMatrix p = unimodular_v2();
    MinimalBasis right = polyrank::right_nullspace_minimal_basis(p);
    CHECK(right.matrix.rows() == 2);
    CHECK(right.matrix.cols() == 0);
    CHECK(right.degrees.empty());
    MinimalBasis left = polyrank::left_nullspace_minimal_basis(p);
    CHECK(left.matrix.rows() == 0);
    CHECK(left.matrix.cols() == 2);
    CHECK(left.degrees.empty());
}

TEST_CASE("row and column space bases span the matrix") {
    PolyMatrix p = smith_fixture();
    MinimalBasis col = polyrank::col_space_minimal_basis(p);
    CHECK(col.matrix.rows() == 3);
    CHECK(col.matrix.cols() == 2);
    CHECK(polyrank::is_minimal_basis(col.matrix, Orientation::Columns));
    CHECK(col.degrees == std::vector<int>{0, 2});

    MinimalBasis row = polyrank::row_space_minimal_basis(p);
    CHECK(row.matrix.rows() == 2);
    CHECK(row.matrix.cols() == 3);
    CHECK(polyrank::is_minimal_basis(row.matrix, Orientation::Rows));
    CHECK(row.degrees == std::vector<int>{0, 2});

    // Each row of p must be a polynomial combination of the basis rows:
    // stacking them keeps the rank and the row space basis.
    PolyMatrix stacked = row.matrix.transpose().hcat(p.transpose()).transpose();
    CHECK(stacked.normal_rank() == 2);
    CHECK(polyrank::row_space_minimal_basis(stacked).degrees == row.degrees);
}

TEST_CASE("zero matrices have no row or column space basis") {
    CHECK_THROWS_AS(polyrank::col_space_minimal_basis(PolyMatrix(2, 2, 0)),
                    polyrank::input_error);
    CHECK_THROWS_AS(polyrank::row_space_minimal_basis(PolyMatrix(2, 2, 0)),
                    polyrank::input_error);
}

TEST_CASE("the four index lists tie together") {
    for (const PolyMatrix& p : {smith_fixture(), gap_fixture(), orbit_fixture(),
                                profile_fixture(), redist_fixture()}) {
        MinimalIndices mi = polyrank::minimal_indices(p);
        int r = p.normal_rank();
        CHECK(static_cast<int>(mi.row_space.size()) == r);
        CHECK(static_cast<int>(mi.col_space.size()) == r);
        CHECK(static_cast<int>(mi.left_nullspace.size()) == p.rows() - r);
        CHECK(static_cast<int>(mi.right_nullspace.size()) == p.cols() - r);
        // Nullspace and opposite-side space indices share their sums.
        CHECK(sum(mi.left_nullspace) == sum(mi.col_space));
        CHECK(sum(mi.right_nullspace) == sum(mi.row_space));
    }
}

TEST_CASE("index sums balance on random rank-deficient products") {
    SampleStream gen(321);
    for (int t = 0; t < 15; ++t) {
        PolyMatrix l = oracles::random_matrix(gen, 3, 2, 2, 2);
        PolyMatrix r = oracles::random_matrix(gen, 2, 4, 2, 2);
        PolyMatrix p = l.multiply(r);
        if (p.normal_rank() == 0) continue;
        MinimalIndices mi = polyrank::minimal_indices(p);
        CHECK(sum(mi.left_nullspace) == sum(mi.col_space));
        CHECK(sum(mi.right_nullspace) == sum(mi.row_space));
    }
}

TEST_CASE("known minimal fixture indices") {
    MinimalIndices mi = polyrank::minimal_indices(gap_fixture());
    CHECK(mi.row_space == std::vector<int>{1, 4});
    CHECK(mi.col_space == std::vector<int>{2, 5});
    CHECK(mi.right_nullspace == std::vector<int>{5});
    CHECK(mi.left_nullspace == std::vector<int>{7});
}
