#pragma once

#include <vector>

#include "polyrank/poly_matrix.hpp"
#include "polyrank/sampling.hpp"

// Slow but independent reference computations.  Nothing here shares code
// with the library's elimination routines: determinants come from Laplace
// expansion and invariant polynomials from gcds of all k x k minors, so an
// agreement between the two paths is meaningful evidence.

namespace oracles {

using polyrank::Poly;
using polyrank::PolyMatrix;

// Determinant by Laplace expansion along the first row.
Poly laplace_determinant(const PolyMatrix& p);

// Largest k such that some k x k minor is not the zero polynomial.
int minor_rank(const PolyMatrix& p);

// Invariant polynomials as successive quotients of the monic gcds of all
// k x k minors, k = 1..rank.
std::vector<Poly> minor_gcd_invariants(const PolyMatrix& p);

// Deterministic random inputs for the property suites.
Poly random_poly(polyrank::SampleStream& gen, int max_degree, int bound);
PolyMatrix random_matrix(polyrank::SampleStream& gen, int rows, int cols, int max_degree,
                         int bound);
// Identity hit with `ops` random elementary row operations: always unimodular.
PolyMatrix random_unimodular(polyrank::SampleStream& gen, int n, int ops, int bound);

}  // namespace oracles
