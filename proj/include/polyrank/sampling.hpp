#pragma once

#include <cstdint>

#include "polyrank/generic_sets.hpp"

namespace polyrank {

// Deterministic 64-bit generator (splitmix64).  The whole sampling contract
// is seed-stable: the same seed and parameters always produce the same
// factorization, on every platform.
class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    // Uniform in [0, span); span must be positive.
    std::uint64_t below(std::uint64_t span);

    // Uniform over the integers in [-bound, bound].
    Rational coefficient(int bound);

    // Uniform over the integers in [-bound, bound] with zero excluded.
    Rational nonzero_coefficient(int bound);

private:
    std::uint64_t state_;
};

struct SampleResult {
    FactorizationWitness witness;
    PolyMatrix product;
    int attempts;
};

// Draws one factorization with the homogeneous right factor row degree
// profile for (d, r, a).  Coefficients are integers from [-bound, bound];
// every leading coefficient is drawn nonzero, so the degree profile is exact
// and the result is always a member.
SampleResult sample_b_member(int m, int n, int d, int r, int a, std::uint64_t seed, int bound);

// Draws profile factorizations from a single stream until both factors are
// minimal bases whose nullspace index lists are the homogeneous ones, i.e.
// until the draw lands in the heart of the family.  Throws attempts_exhausted
// when max_attempts draws all fail.
SampleResult sample_mh_member(int m, int n, int d, int r, int a, std::uint64_t seed, int bound,
                              int max_attempts);

} // namespace polyrank
