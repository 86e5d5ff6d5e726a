#include <doctest.h>

#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "polyrank/errors.hpp"
#include "polyrank/sampling.hpp"
#include "polyrank/smith.hpp"

using namespace fixtures;
using polyrank::Poly;
using polyrank::PolyMatrix;
using polyrank::Rational;
using polyrank::SampleStream;
using polyrank::SmithExtended;

TEST_CASE("decomposition of the rank-two fixture") {
    PolyMatrix p = smith_fixture();
    SmithExtended sd = smith_decompose_extended(p);
    REQUIRE(sd.rank == 2);
    REQUIRE(sd.invariants.size() == 2);
    CHECK(sd.invariants[0] == Poly::one());
    CHECK(sd.invariants[1] == lam(11));

    CHECK(sd.u.is_unimodular());
    CHECK(sd.v.is_unimodular());
    CHECK(sd.u.multiply(sd.s(3, 3)).multiply(sd.v).same_entries(p));
    CHECK(sd.u.multiply(sd.u_inv).same_entries(PolyMatrix::identity(3)));
    CHECK(sd.v_inv.multiply(sd.v).same_entries(PolyMatrix::identity(3)));
}

TEST_CASE("the hand-checked transformation pair reproduces the fixture") {
    // An independently verified unimodular pair for the same fixture; this
    // pins the invariant list without trusting the elimination code.
    PolyMatrix s = PolyMatrix::diagonal_embed(3, 3, {num(1), lam(11)});
    CHECK(smith_fixture_u().multiply(s).multiply(smith_fixture_v()).same_entries(smith_fixture()));
}

TEST_CASE("invariant polynomials divide each other and are monic") {
    SampleStream gen(1313);
    for (int t = 0; t < 25; ++t) {
        int m = 1 + static_cast<int>(gen.below(3));
        int n = 1 + static_cast<int>(gen.below(3));
        PolyMatrix p = oracles::random_matrix(gen, m, n, 3, 3);
        auto inv = polyrank::invariant_polynomials(p);
        CHECK(static_cast<int>(inv.size()) == p.normal_rank());
        for (size_t k = 0; k < inv.size(); ++k) {
            CHECK(inv[k].is_monic());
            if (k > 0) CHECK(polyrank::poly_divrem(inv[k], inv[k - 1]).second.is_zero());
        }
    }
}

TEST_CASE("invariant polynomials agree with the minor-gcd oracle") {
    CHECK(polyrank::invariant_polynomials(smith_fixture()) ==
          oracles::minor_gcd_invariants(smith_fixture()));
    CHECK(polyrank::invariant_polynomials(orbit_fixture()) ==
          oracles::minor_gcd_invariants(orbit_fixture()));

    SampleStream gen(47);
    for (int t = 0; t < 30; ++t) {
        int m = 1 + static_cast<int>(gen.below(3));
        int n = 1 + static_cast<int>(gen.below(3));
        PolyMatrix p = oracles::random_matrix(gen, m, n, 3, 3);
        CHECK(polyrank::invariant_polynomials(p) == oracles::minor_gcd_invariants(p));
    }
}

TEST_CASE("decomposition reconstructs random rank-deficient products") {
    SampleStream gen(909);
    for (int t = 0; t < 15; ++t) {
        PolyMatrix l = oracles::random_matrix(gen, 3, 2, 2, 2);
        PolyMatrix r = oracles::random_matrix(gen, 2, 3, 2, 2);
        PolyMatrix p = l.multiply(r);
        SmithExtended sd = smith_decompose_extended(p);
        CHECK(sd.rank <= 2);
        CHECK(sd.u.multiply(sd.s(3, 3)).multiply(sd.v).same_entries(p));
        CHECK(sd.u.multiply(sd.u_inv).same_entries(PolyMatrix::identity(3)));
        CHECK(sd.v.multiply(sd.v_inv).same_entries(PolyMatrix::identity(3)));
    }
}

TEST_CASE("unimodular and zero corner cases") {
    SmithExtended su = smith_decompose_extended(unimodular_v2());
    CHECK(su.rank == 2);
    CHECK(su.invariants == std::vector<Poly>{Poly::one(), Poly::one()});

    SmithExtended sz = smith_decompose_extended(PolyMatrix(2, 3, 1));
    CHECK(sz.rank == 0);
    CHECK(sz.invariants.empty());
    CHECK(sz.u.multiply(sz.s(2, 3)).multiply(sz.v).is_zero());

    SmithExtended s1 = smith_decompose_extended(PolyMatrix::from_rows({{lam(2).scaled(Rational(3))}}));
    CHECK(s1.invariants == std::vector<Poly>{lam(2)});  // made monic
}

TEST_CASE("multiplicity sequences at a finite point") {
    PolyMatrix p = PolyMatrix::diagonal({num(1), lam(2), lam(2) * (lam(1) - num(1))});
    auto at0 = polyrank::partial_multiplicities_at(p, Rational(0));
    CHECK(at0 == std::vector<int>{0, 2, 2});
    auto at1 = polyrank::partial_multiplicities_at(p, Rational(1));
    CHECK(at1 == std::vector<int>{0, 0, 1});
    auto at2 = polyrank::partial_multiplicities_at(p, Rational(2));
    CHECK(at2 == std::vector<int>{0, 0, 0});

    CHECK(polyrank::partial_multiplicities_at(smith_fixture(), Rational(0)) ==
          std::vector<int>{0, 11});
}

TEST_CASE("multiplicities at infinity start at grade minus degree") {
    PolyMatrix p = smith_fixture();  // grade 8, degree 8
    auto inf8 = polyrank::partial_multiplicities_at_infinity(p);
    REQUIRE(inf8.size() == 2);
    CHECK(inf8[0] == 0);

    auto inf10 = polyrank::partial_multiplicities_at_infinity(p.with_grade(10));
    REQUIRE(inf10.size() == 2);
    CHECK(inf10[0] == 2);
    // Raising the grade by c adds c to every term of the sequence.
    CHECK(inf10[1] == inf8[1] + 2);

    // A matrix polynomial with an invertible leading coefficient has no
    // structure at infinity at its natural grade.
    PolyMatrix q = PolyMatrix::from_rows({{lam(1), num(1)}, {num(1), lam(1)}});
    auto infq = polyrank::partial_multiplicities_at_infinity(q);
    CHECK(infq == std::vector<int>{0, 0});
}

TEST_CASE("decomposition is deterministic") {
    SmithExtended a = smith_decompose_extended(smith_fixture());
    SmithExtended b = smith_decompose_extended(smith_fixture());
    CHECK(a.u == b.u);
    CHECK(a.v == b.v);
    CHECK(a.u_inv == b.u_inv);
    CHECK(a.v_inv == b.v_inv);
}
