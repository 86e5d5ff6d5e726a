#include "polyrank/sampling.hpp"

#include <vector>

#include "polyrank/eigenstructure.hpp"
#include "polyrank/errors.hpp"
#include "polyrank/minimal_basis.hpp"

namespace polyrank {

std::uint64_t SampleStream::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t SampleStream::below(std::uint64_t span) {
    ensure(span > 0, "sampling span must be positive");
    return next() % span;
}

Rational SampleStream::coefficient(int bound) {
    require(bound >= 1, "coefficient bound must be at least 1");
    std::uint64_t b = static_cast<std::uint64_t>(bound);
    std::uint64_t r = below(2 * b + 1);
    return Rational(static_cast<long>(r) - bound);
}

Rational SampleStream::nonzero_coefficient(int bound) {
    require(bound >= 1, "coefficient bound must be at least 1");
    std::uint64_t b = static_cast<std::uint64_t>(bound);
    std::uint64_t r = below(2 * b);
    long v = static_cast<long>(r) - bound;
    if (v >= 0) ++v;
    return Rational(v);
}

namespace {

void validate_sample_params(int m, int n, int d, int r, int a, int bound) {
    require(m >= 2 && n >= 2, "shape must be at least 2 x 2");
    require(d >= 1, "grade must be at least 1");
    require(r >= 1 && r < std::min(m, n), "rank parameter must satisfy 1 <= r < min(m, n)");
    require(a >= 0 && a <= r * d, "index sum out of range");
    require(bound >= 1, "coefficient bound must be at least 1");
}

Poly draw_poly(SampleStream& gen, int degree, int bound) {
    std::vector<Rational> cs(degree + 1);
    for (int k = 0; k < degree; ++k) cs[k] = gen.coefficient(bound);
    cs[degree] = gen.nonzero_coefficient(bound);
    return Poly(std::move(cs));
}

// Left factor column-major, then right factor row-major, coefficients in
// ascending degree order.  This order is part of the seed contract.
FactorizationWitness draw_profile_witness(SampleStream& gen, int m, int n, int d, int r, int a,
                                          int bound) {
    std::vector<int> g = bset_row_profile(d, r, a);
    std::vector<std::vector<Poly>> lrows(m, std::vector<Poly>(r));
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < m; ++i) lrows[i][j] = draw_poly(gen, d - g[j], bound);
    std::vector<std::vector<Poly>> rrows(r, std::vector<Poly>(n));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) rrows[i][j] = draw_poly(gen, g[i], bound);
    return {PolyMatrix::from_rows(lrows), PolyMatrix::from_rows(rrows)};
}

} // namespace

SampleResult sample_b_member(int m, int n, int d, int r, int a, std::uint64_t seed, int bound) {
    validate_sample_params(m, n, d, r, a, bound);
    SampleStream gen(seed);
    FactorizationWitness w = draw_profile_witness(gen, m, n, d, r, a, bound);
    // The family lives in grade-d space; stamp the ambient grade even if
    // top coefficients happen to cancel in the product.
    PolyMatrix product = w.l.multiply(w.r).with_grade(d);
    return {std::move(w), std::move(product), 1};
}

SampleResult sample_mh_member(int m, int n, int d, int r, int a, std::uint64_t seed, int bound,
                              int max_attempts) {
    validate_sample_params(m, n, d, r, a, bound);
    require(max_attempts >= 1, "attempt limit must be at least 1");
    GenericOrbitSpec spec = generic_orbit_spec(m, n, d, r, a);
    SampleStream gen(seed);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        FactorizationWitness w = draw_profile_witness(gen, m, n, d, r, a, bound);
        if (!is_minimal_basis(w.l, Orientation::Columns)) continue;
        if (!is_minimal_basis(w.r, Orientation::Rows)) continue;
        if (left_nullspace_minimal_basis(w.l).degrees != spec.left_indices) continue;
        if (right_nullspace_minimal_basis(w.r).degrees != spec.right_indices) continue;
        PolyMatrix product = w.l.multiply(w.r).with_grade(d);
        return {std::move(w), std::move(product), attempt};
    }
    throw attempts_exhausted("no draw matched the family within the attempt limit");
}

} // namespace polyrank
