#pragma once

#include <optional>
#include <string>

#include "polyrank/factorization.hpp"
#include "polyrank/generic_sets.hpp"
#include "polyrank/poly_matrix.hpp"

namespace polyrank {

// Matrix document: a single object {"m", "n", "grade", "entries"} where
// entries is the row-major list of m*n ascending coefficient lists and each
// coefficient is a string "n" or "n/d".  Parsing is liberal about JSON
// formatting and reduces fractions, but rejects unknown fields, malformed or
// zero-denominator rationals, and a grade below the actual degree.  Emission
// is canonical: sorted keys, two-space indent, trailing newline, bit-exact
// round-trip.
PolyMatrix parse_matrix_document(const std::string& text);
std::string emit_matrix_document(const PolyMatrix& m);

// Witness document: {"l": matrix document, "r": matrix document}.
FactorizationWitness parse_witness_document(const std::string& text);
std::string emit_witness_document(const FactorizationWitness& w);

// Decimal square root of an exact nonnegative rational, 20 significant
// digits, for display only.
std::string decimal_sqrt_display(const Rational& squared);

enum class SubspaceKind { LeftNullspace, RightNullspace, RowSpace, ColSpace };
SubspaceKind parse_subspace_token(const std::string& token);

FactorKind parse_factor_kind_token(const std::string& token);

// Report builders.  Every report is a canonical JSON document (sorted keys,
// deterministic bytes) ending in a newline.
std::string report_smith(const PolyMatrix& p);
std::string report_minimal_basis(const PolyMatrix& p, SubspaceKind kind);
std::string report_factor(const PolyMatrix& p, FactorKind kind);
std::string report_eigenstructure(const PolyMatrix& p);
std::string report_classify(const PolyMatrix& p, int r);
std::string report_distance(const PolyMatrix& a, const PolyMatrix& b);

struct VerifyOutcome {
    std::string report;
    bool product_ok;
};
VerifyOutcome report_verify(const PolyMatrix& p, const PolyMatrix& l,
                            const std::optional<PolyMatrix>& e, const PolyMatrix& r);

struct MembershipOutcome {
    std::string report;
    Verdict verdict;
};
MembershipOutcome report_membership(const PolyMatrix& p, const SetDescriptor& desc,
                                    const std::optional<FactorizationWitness>& witness);

std::string report_sample(SetFamily family, int m, int n, int d, int r, int a,
                          unsigned long long seed, int bound, int max_attempts);

struct PerturbRequest {
    std::string op; // "pad" | "redistribute" | "homogenize"
    Rational epsilon;
    std::optional<int> grade; // pad target degree
    std::optional<int> j;     // redistribute source row, 1-based
    std::optional<int> k;     // redistribute target row, 1-based
};
std::string report_perturb(const FactorizationWitness& w, const PerturbRequest& req);

} // namespace polyrank
