#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyrank/poly_matrix.hpp"

namespace polyrank {

// Families of factorized matrices distinguished by degree constraints on the
// factors.  S bounds per-index degree sums by d; A demands equality; Aa fixes
// the total row degree of the right factor; ARho fixes the row degrees up to
// simultaneous permutation; B is ARho at the most homogeneous degree split;
// C relaxes B's equalities to upper bounds; M adds that both factors are
// minimal bases; MH further pins the nullspace index lists; OrbK is the set
// of matrices with the generic eigenvalue-free structure of index sum a.
enum class SetFamily { S, A, Aa, ARho, B, C, M, MH, OrbK };

std::string family_token(SetFamily f);
SetFamily parse_family_token(const std::string& token);

struct SetDescriptor {
    SetFamily family;
    int m = 0, n = 0, d = 0, r = 0;
    std::optional<int> a;                 // row-degree sum of the right factor
    std::optional<std::vector<int>> rho;  // ARho only: prescribed row degrees
};

struct FactorizationWitness {
    PolyMatrix l;  // m x r
    PolyMatrix r;  // r x n
};

enum class Verdict { DefinitelyIn, DefinitelyNot, Unknown };

std::string verdict_token(Verdict v);

// DefinitelyIn always carries a witness that passed the family's own checks;
// DefinitelyNot always cites a violated necessary condition in the evidence.
struct Membership {
    Verdict verdict;
    std::string evidence;
    std::optional<FactorizationWitness> witness;
};

struct BsetParams {
    int d_r;  // floor(a / r)
    int t_r;  // a mod r
};

// Requires r >= 1 and 0 <= a <= r*d.
BsetParams bset_params(int d, int r, int a);

// The homogeneous right-factor row degree profile: t_r entries d_r + 1
// followed by r - t_r entries d_r (descending, matching slot order).
std::vector<int> bset_row_profile(int d, int r, int a);

// Decides or screens membership of p in the described set.  With a witness,
// the family conditions are verified verbatim on it (up to simultaneous
// permutation of the inner index).  Without one, S is decided exactly from
// rank and degree, OrbK from the complete eigenstructure; the remaining
// families are screened against necessary conditions, so the verdict can be
// Unknown.  The screens that compare factor degrees with the row/column
// space minimal indices are only applied when the normal rank equals r:
// for lower rank the spanning rows of a factor need not contain the row
// space's minimal vectors, and the comparison would be unsound.
Membership check_membership(const PolyMatrix& p, const SetDescriptor& desc,
                            const std::optional<FactorizationWitness>& witness);

// A perturbed factorization plus exact displacement accounting.  The bound
// is steps * (sum of per-step displacements), an upper bound for the total
// squared displacement by the Cauchy-Schwarz inequality; for the single-step
// operations it coincides with distance_sq.
struct PerturbedWitness {
    FactorizationWitness witness;
    Rational distance_sq;                     // |new product - old product|^2
    std::vector<Rational> step_distances_sq;  // one entry per applied step
    Rational distance_sq_bound;
};

// Raises every slack per-index degree sum to exactly d by adding an
// eps-scaled monomial multiple of the first standard basis vector to the
// left factor (and a constant row to the right factor when the pair is
// zero).  Requires all sums <= d and L column j zero whenever R row j is
// zero.  The added monomial always sits strictly above the column it lands
// in, so the construction cannot cancel and succeeds for every positive eps.
PerturbedWitness pad_to_equality(const FactorizationWitness& w, int d, const Rational& eps);

// Moves one degree unit from right-factor row j to row k (1-based), keeping
// the product of the output pair bit-identical to the perturbed product.
// Requires all per-index sums equal and deg(R_j) - deg(R_k) >= 2.  Throws
// epsilon_too_large when the rebalanced degrees fail verification.
PerturbedWitness redistribute_degrees(const FactorizationWitness& w, int j, int k,
                                      const Rational& eps);

// Repeats redistribute_degrees on a (max, min) row-degree pair until the
// row degrees match the homogeneous profile, splitting eps geometrically
// across steps and halving on a failed step.
PerturbedWitness homogenize_degrees(const FactorizationWitness& w, const Rational& eps);

} // namespace polyrank
