#include "polyrank/eigenstructure.hpp"

#include <numeric>

#include "polyrank/errors.hpp"
#include "polyrank/minimal_basis.hpp"
#include "polyrank/smith.hpp"

namespace polyrank {

namespace {

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::vector<int> homogeneous_list(int count, int low, int high_count) {
    // ascending: (count - high_count) copies of low, then high_count of low+1
    std::vector<int> out;
    for (int i = 0; i < count - high_count; ++i) out.push_back(low);
    for (int i = 0; i < high_count; ++i) out.push_back(low + 1);
    return out;
}

} // namespace

Eigenstructure complete_eigenstructure(const PolyMatrix& p) {
    Eigenstructure es;
    es.grade = p.grade();
    SmithExtended s = smith_decompose_extended(p);
    es.rank = s.rank;
    es.invariants = s.invariants;
    es.inf_mults = s.rank >= 1 ? partial_multiplicities_at_infinity(p) : std::vector<int>{};
    es.left_indices = left_nullspace_minimal_basis(p).degrees;
    es.right_indices = right_nullspace_minimal_basis(p).degrees;

    int finite_total = 0;
    for (const Poly& e : es.invariants)
        finite_total += e.is_zero() ? 0 : e.degree().value();
    ensure(es.rank * es.grade ==
               sum(es.left_indices) + sum(es.right_indices) + sum(es.inf_mults) + finite_total,
           "index sum identity violated");
    return es;
}

bool is_eigenvalue_free(const PolyMatrix& p) {
    Eigenstructure es = complete_eigenstructure(p);
    for (const Poly& e : es.invariants)
        if (!e.is_one()) return false;
    for (int g : es.inf_mults)
        if (g != 0) return false;
    return true;
}

GenericOrbitSpec generic_orbit_spec(int m, int n, int d, int r, int a) {
    require(m >= 2 && n >= 2, "shape must be at least 2 x 2");
    require(d >= 1, "grade must be at least 1");
    require(r >= 1 && r < std::min(m, n), "rank must satisfy 1 <= r < min(m, n)");
    require(a >= 0 && a <= r * d, "right index sum out of range");
    GenericOrbitSpec spec;
    spec.a = a;
    spec.alpha = a / (n - r);
    spec.s = a % (n - r);
    spec.beta = (r * d - a) / (m - r);
    spec.t = (r * d - a) % (m - r);
    spec.right_indices = homogeneous_list(n - r, spec.alpha, spec.s);
    spec.left_indices = homogeneous_list(m - r, spec.beta, spec.t);
    ensure(sum(spec.right_indices) + sum(spec.left_indices) == r * d, "generic index lists must exhaust r*d");
    return spec;
}

FullRankGenericSpec full_rank_generic_spec(int m, int n, int d) {
    require(m >= 1 && n >= 1, "shape must be at least 1 x 1");
    require(d >= 1, "grade must be at least 1");
    FullRankGenericSpec spec;
    spec.regular = m == n;
    if (m < n) {
        int alpha = m * d / (n - m);
        int s = m * d % (n - m);
        spec.right_indices = homogeneous_list(n - m, alpha, s);
    } else if (m > n) {
        int beta = n * d / (m - n);
        int t = n * d % (m - n);
        spec.left_indices = homogeneous_list(m - n, beta, t);
    }
    return spec;
}

std::optional<int> classify_orbit(const PolyMatrix& p, int r) {
    require(r >= 1 && r < std::min(p.rows(), p.cols()), "rank must satisfy 1 <= r < min(m, n)");
    require(p.grade() >= 1, "classification needs a grade of at least 1");
    Eigenstructure es = complete_eigenstructure(p);
    if (es.rank != r) return std::nullopt;
    for (const Poly& e : es.invariants)
        if (!e.is_one()) return std::nullopt;
    for (int g : es.inf_mults)
        if (g != 0) return std::nullopt;
    int a = sum(es.right_indices);
    if (a < 0 || a > r * p.grade()) return std::nullopt;
    GenericOrbitSpec spec = generic_orbit_spec(p.rows(), p.cols(), p.grade(), r, a);
    if (es.right_indices != spec.right_indices || es.left_indices != spec.left_indices)
        return std::nullopt;
    return a;
}

} // namespace polyrank
