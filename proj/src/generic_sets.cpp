#include "polyrank/generic_sets.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "polyrank/eigenstructure.hpp"
#include "polyrank/errors.hpp"
#include "polyrank/factorization.hpp"
#include "polyrank/minimal_basis.hpp"

namespace polyrank {

namespace {

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::string int_list(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ")";
    return os.str();
}

std::string degree_list(const std::vector<Degree>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].to_string();
    }
    os << ")";
    return os.str();
}

// Sorted list of the finite minimal indices; callers only use this when the
// basis exists, so every entry is finite.
std::vector<int> finite_values(const std::vector<Degree>& v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (const Degree& d : v) {
        ensure(d.is_finite(), "expected a finite degree list");
        out.push_back(d.value());
    }
    return out;
}

PolyMatrix at_natural_grade(const PolyMatrix& m) {
    Degree d = m.degree();
    return m.with_grade(d.is_finite() ? d.value() : 0);
}

void validate_descriptor(const PolyMatrix& p, const SetDescriptor& desc) {
    require(desc.m == p.rows() && desc.n == p.cols(), "descriptor shape must match the matrix");
    require(desc.d == p.grade(), "descriptor grade must match the matrix grade");
    require(desc.m >= 2 && desc.n >= 2, "shape must be at least 2 x 2");
    require(desc.d >= 1, "grade must be at least 1");
    require(desc.r >= 1 && desc.r < std::min(desc.m, desc.n),
            "rank parameter must satisfy 1 <= r < min(m, n)");
    switch (desc.family) {
        case SetFamily::S:
        case SetFamily::A:
            require(!desc.a.has_value(), "family does not take an index sum");
            require(!desc.rho.has_value(), "family does not take a row degree list");
            break;
        case SetFamily::ARho: {
            require(desc.rho.has_value(), "family requires a row degree list");
            require(static_cast<int>(desc.rho->size()) == desc.r,
                    "row degree list must have r entries");
            int total = 0;
            for (int x : *desc.rho) {
                require(x >= 0 && x <= desc.d, "row degrees must lie in [0, d]");
                total += x;
            }
            if (desc.a.has_value())
                require(*desc.a == total, "index sum must equal the row degree total");
            break;
        }
        default:
            require(desc.a.has_value(), "family requires an index sum");
            require(*desc.a >= 0 && *desc.a <= desc.r * desc.d, "index sum out of range");
            require(!desc.rho.has_value(), "family does not take a row degree list");
            break;
    }
}

int descriptor_a(const SetDescriptor& desc) {
    if (desc.a.has_value()) return *desc.a;
    ensure(desc.family == SetFamily::ARho && desc.rho.has_value(),
           "index sum is only implicit for the fixed-degree family");
    return sum(*desc.rho);
}

// Checks the verbatim family conditions on a candidate factorization.
// Returns the first violated condition, or nullopt when the witness passes.
std::optional<std::string> witness_violation(const PolyMatrix& p, const SetDescriptor& desc,
                                             const FactorizationWitness& w) {
    require(w.l.rows() == desc.m && w.l.cols() == desc.r, "left factor must be m x r");
    require(w.r.rows() == desc.r && w.r.cols() == desc.n, "right factor must be r x n");
    if (!w.l.multiply(w.r).same_entries(p))
        return "the factor product does not reproduce the matrix";

    std::vector<Degree> dl = w.l.degree_profile(Orientation::Columns);
    std::vector<Degree> dr = w.r.degree_profile(Orientation::Rows);
    const Degree dd = Degree::of(desc.d);

    if (desc.family == SetFamily::S) {
        for (int i = 0; i < desc.r; ++i) {
            if (!(dl[i] <= dd)) return "a left factor column has degree above d";
            if (!(dr[i] <= dd)) return "a right factor row has degree above d";
            if (!(dl[i] + dr[i] <= dd)) return "a per-index degree sum exceeds d";
        }
        return std::nullopt;
    }

    if (desc.family == SetFamily::C) {
        // Each index must fit one of the two slot types, with slot counts
        // respected.  An index that fits only the wide-row slot consumes one
        // of the t_r wide slots; one that fits only the narrow-row slot
        // consumes one of the remaining r - t_r.
        BsetParams bp = bset_params(desc.d, desc.r, descriptor_a(desc));
        int wide_only = 0, narrow_only = 0;
        for (int i = 0; i < desc.r; ++i) {
            bool wide = dr[i] <= Degree::of(bp.d_r + 1) && dl[i] <= Degree::of(desc.d - bp.d_r - 1);
            bool narrow = dr[i] <= Degree::of(bp.d_r) && dl[i] <= Degree::of(desc.d - bp.d_r);
            if (!wide && !narrow) return "an index fits neither degree slot of the family";
            if (wide && !narrow) ++wide_only;
            if (narrow && !wide) ++narrow_only;
        }
        if (wide_only > bp.t_r) return "too many indices need the wide row degree slot";
        if (narrow_only > desc.r - bp.t_r) return "too many indices need the narrow row degree slot";
        return std::nullopt;
    }

    // Every remaining family lives inside the equal-sums set.
    for (int i = 0; i < desc.r; ++i)
        if (!(dl[i] + dr[i] == dd)) return "a per-index degree sum differs from d";
    std::vector<int> rowdeg = finite_values(dr);

    switch (desc.family) {
        case SetFamily::A:
            return std::nullopt;
        case SetFamily::Aa:
            if (sum(rowdeg) != descriptor_a(desc))
                return "the right factor row degrees have the wrong total";
            return std::nullopt;
        case SetFamily::ARho:
            if (sorted(rowdeg) != sorted(*desc.rho))
                return "the right factor row degrees do not match the prescribed list";
            return std::nullopt;
        case SetFamily::B:
            if (sorted(rowdeg) != sorted(bset_row_profile(desc.d, desc.r, descriptor_a(desc))))
                return "the right factor row degrees do not match the homogeneous profile";
            return std::nullopt;
        default:
            break;
    }

    // M, MH, and the generic orbit set all require minimal bases.
    if (desc.family != SetFamily::OrbK) {
        if (sorted(rowdeg) != sorted(bset_row_profile(desc.d, desc.r, descriptor_a(desc))))
            return "the right factor row degrees do not match the homogeneous profile";
    }
    if (!is_minimal_basis(w.l, Orientation::Columns))
        return "the left factor columns are not a minimal basis";
    if (!is_minimal_basis(w.r, Orientation::Rows))
        return "the right factor rows are not a minimal basis";
    if (desc.family == SetFamily::M) return std::nullopt;

    // MH and OrbK additionally pin the nullspace index lists of the factors.
    GenericOrbitSpec spec = generic_orbit_spec(desc.m, desc.n, desc.d, desc.r, descriptor_a(desc));
    std::vector<int> left_of_l = left_nullspace_minimal_basis(w.l).degrees;
    std::vector<int> right_of_r = right_nullspace_minimal_basis(w.r).degrees;
    if (left_of_l != spec.left_indices)
        return "the left factor nullspace indices are not the homogeneous list";
    if (right_of_r != spec.right_indices)
        return "the right factor nullspace indices are not the homogeneous list";

    if (desc.family == SetFamily::MH) {
        // The factors force the same index lists on the product; failing
        // that would mean one of the primitives above is broken.
        ensure(left_nullspace_minimal_basis(p).degrees == left_of_l,
               "factor and product left nullspace indices must coincide");
        ensure(right_nullspace_minimal_basis(p).degrees == right_of_r,
               "factor and product right nullspace indices must coincide");
    }
    return std::nullopt;
}

// Builds an LcR-style factorization with inner dimension exactly r, padding
// with zero columns and rows when the normal rank is smaller.
FactorizationWitness padded_factorization(const PolyMatrix& p, int r) {
    int rk = p.normal_rank();
    ensure(rk <= r, "padding needs rank at most r");
    PolyMatrix l(p.rows(), r, 0);
    PolyMatrix rr(r, p.cols(), 0);
    if (rk >= 1) {
        RankFactorization f = minimal_rank_factorization(p, FactorKind::LcR);
        for (int i = 0; i < p.rows(); ++i)
            for (int j = 0; j < rk; ++j) l.set(i, j, f.l.at(i, j));
        for (int i = 0; i < rk; ++i)
            for (int j = 0; j < p.cols(); ++j) rr.set(i, j, f.r.at(i, j));
    }
    return {at_natural_grade(l), at_natural_grade(rr)};
}

Membership decide_s(const PolyMatrix& p, const SetDescriptor& desc, const std::string& prefix) {
    int rk = p.normal_rank();
    if (rk > desc.r) {
        std::ostringstream os;
        os << prefix << "normal rank " << rk << " exceeds the family parameter r = " << desc.r;
        return {Verdict::DefinitelyNot, os.str(), std::nullopt};
    }
    // Rank fits and deg(p) <= grade = d, so p factors within the degree box:
    // a column reduced factorization keeps every per-index sum at deg(p).
    FactorizationWitness cand = padded_factorization(p, desc.r);
    std::optional<std::string> viol = witness_violation(p, desc, cand);
    ensure(!viol.has_value(), "constructed membership certificate failed its own check");
    return {Verdict::DefinitelyIn,
            prefix + "rank and degree fit the family box; a certifying factorization was "
                     "constructed and checked",
            cand};
}

Membership decide_orbk(const PolyMatrix& p, const SetDescriptor& desc, const std::string& prefix) {
    int a = descriptor_a(desc);
    std::optional<int> cls = classify_orbit(p, desc.r);
    if (cls.has_value() && *cls == a) {
        RankFactorization f = minimal_rank_factorization(p, FactorKind::LcR);
        FactorizationWitness cand{at_natural_grade(f.l), at_natural_grade(f.r)};
        std::optional<std::string> viol = witness_violation(p, desc, cand);
        ensure(!viol.has_value(), "constructed membership certificate failed its own check");
        return {Verdict::DefinitelyIn,
                prefix + "the matrix has the generic eigenvalue-free structure for this index "
                         "sum; a certifying factorization was constructed and checked",
                cand};
    }

    std::ostringstream os;
    os << prefix;
    if (cls.has_value()) {
        os << "the matrix has the generic structure for index sum " << *cls << ", not " << a;
        return {Verdict::DefinitelyNot, os.str(), std::nullopt};
    }
    Eigenstructure es = complete_eigenstructure(p);
    if (es.rank != desc.r) {
        os << "normal rank " << es.rank << " differs from r = " << desc.r;
    } else if (!is_eigenvalue_free(p)) {
        os << "the matrix has finite or infinite eigenvalues";
    } else {
        os << "the minimal index lists, right " << int_list(es.right_indices) << " and left "
           << int_list(es.left_indices) << ", are not homogeneous";
    }
    return {Verdict::DefinitelyNot, os.str(), std::nullopt};
}

Membership screen_family(const PolyMatrix& p, const SetDescriptor& desc,
                         const std::string& prefix) {
    int rk = p.normal_rank();
    if (rk > desc.r) {
        std::ostringstream os;
        os << prefix << "normal rank " << rk << " exceeds the family parameter r = " << desc.r;
        return {Verdict::DefinitelyNot, os.str(), std::nullopt};
    }

    if (desc.family == SetFamily::M || desc.family == SetFamily::MH) {
        if (rk != desc.r) {
            std::ostringstream os;
            os << prefix << "a minimal-basis factorization forces normal rank exactly "
               << desc.r << ", but the matrix has rank " << rk;
            return {Verdict::DefinitelyNot, os.str(), std::nullopt};
        }
        if (!is_eigenvalue_free(p))
            return {Verdict::DefinitelyNot,
                    prefix + "members have no finite or infinite eigenvalues, but the matrix "
                             "has some",
                    std::nullopt};
        MinimalIndices mi = minimal_indices(p);
        std::vector<int> profile = sorted(bset_row_profile(desc.d, desc.r, descriptor_a(desc)));
        std::vector<int> co_profile;
        for (int x : profile) co_profile.push_back(desc.d - x);
        std::sort(co_profile.begin(), co_profile.end());
        if (sorted(mi.row_space) != profile) {
            std::ostringstream os;
            os << prefix << "the row space minimal indices " << int_list(sorted(mi.row_space))
               << " differ from the homogeneous profile " << int_list(profile);
            return {Verdict::DefinitelyNot, os.str(), std::nullopt};
        }
        if (sorted(mi.col_space) != co_profile) {
            std::ostringstream os;
            os << prefix << "the column space minimal indices " << int_list(sorted(mi.col_space))
               << " differ from the complementary profile " << int_list(co_profile);
            return {Verdict::DefinitelyNot, os.str(), std::nullopt};
        }
        if (desc.family == SetFamily::MH) {
            GenericOrbitSpec spec =
                generic_orbit_spec(desc.m, desc.n, desc.d, desc.r, descriptor_a(desc));
            if (mi.right_nullspace != spec.right_indices) {
                std::ostringstream os;
                os << prefix << "the right nullspace indices " << int_list(mi.right_nullspace)
                   << " differ from the homogeneous list " << int_list(spec.right_indices);
                return {Verdict::DefinitelyNot, os.str(), std::nullopt};
            }
            if (mi.left_nullspace != spec.left_indices) {
                std::ostringstream os;
                os << prefix << "the left nullspace indices " << int_list(mi.left_nullspace)
                   << " differ from the homogeneous list " << int_list(spec.left_indices);
                return {Verdict::DefinitelyNot, os.str(), std::nullopt};
            }
        }
        return {Verdict::Unknown,
                prefix + "every necessary condition holds; deciding membership needs a "
                         "verified factorization witness",
                std::nullopt};
    }

    if (rk < desc.r) {
        std::ostringstream os;
        os << prefix << "normal rank " << rk << " is below r = " << desc.r
           << "; the minimal-index screens apply only at full budget rank";
        return {Verdict::Unknown, os.str(), std::nullopt};
    }

    // At rank exactly r the factor rows span the row space, so the sorted
    // row space minimal indices are dominated entrywise by the sorted row
    // degrees of any right factor (and dually for columns).
    MinimalIndices mi = minimal_indices(p);
    std::vector<int> rho_p = sorted(mi.row_space);
    std::vector<int> c_p = sorted(mi.col_space);

    if (desc.family == SetFamily::A) {
        if (sum(rho_p) + sum(c_p) > desc.r * desc.d) {
            std::ostringstream os;
            os << prefix << "the minimal index totals already exceed r*d = " << desc.r * desc.d;
            return {Verdict::DefinitelyNot, os.str(), std::nullopt};
        }
    } else if (desc.family == SetFamily::Aa) {
        int a = descriptor_a(desc);
        if (sum(rho_p) > a) {
            std::ostringstream os;
            os << prefix << "the row space minimal indices total " << sum(rho_p)
               << ", above the right factor budget " << a;
            return {Verdict::DefinitelyNot, os.str(), std::nullopt};
        }
        if (sum(c_p) > desc.r * desc.d - a) {
            std::ostringstream os;
            os << prefix << "the column space minimal indices total " << sum(c_p)
               << ", above the left factor budget " << desc.r * desc.d - a;
            return {Verdict::DefinitelyNot, os.str(), std::nullopt};
        }
    } else {
        // ARho, B, C: entrywise dominance against the sorted bound lists.
        std::vector<int> row_bounds;
        if (desc.family == SetFamily::ARho)
            row_bounds = *desc.rho;
        else
            row_bounds = bset_row_profile(desc.d, desc.r, descriptor_a(desc));
        std::vector<int> col_bounds;
        for (int x : row_bounds) col_bounds.push_back(desc.d - x);
        std::sort(row_bounds.begin(), row_bounds.end());
        std::sort(col_bounds.begin(), col_bounds.end());
        for (int i = 0; i < desc.r; ++i) {
            if (rho_p[i] > row_bounds[i]) {
                std::ostringstream os;
                os << prefix << "the sorted row space minimal indices " << int_list(rho_p)
                   << " are not dominated by the sorted row degree bounds "
                   << int_list(row_bounds);
                return {Verdict::DefinitelyNot, os.str(), std::nullopt};
            }
            if (c_p[i] > col_bounds[i]) {
                std::ostringstream os;
                os << prefix << "the sorted column space minimal indices " << int_list(c_p)
                   << " are not dominated by the sorted column degree bounds "
                   << int_list(col_bounds);
                return {Verdict::DefinitelyNot, os.str(), std::nullopt};
            }
        }
    }

    return {Verdict::Unknown,
            prefix + "no necessary condition is violated; deciding membership needs a "
                     "verified factorization witness",
            std::nullopt};
}

} // namespace

std::string family_token(SetFamily f) {
    switch (f) {
        case SetFamily::S: return "s";
        case SetFamily::A: return "a";
        case SetFamily::Aa: return "a_a";
        case SetFamily::ARho: return "a_rho";
        case SetFamily::B: return "b";
        case SetFamily::C: return "c";
        case SetFamily::M: return "m";
        case SetFamily::MH: return "mh";
        case SetFamily::OrbK: return "orbk";
    }
    ensure(false, "unhandled family token");
    return {};
}

SetFamily parse_family_token(const std::string& token) {
    if (token == "s") return SetFamily::S;
    if (token == "a") return SetFamily::A;
    if (token == "a_a") return SetFamily::Aa;
    if (token == "a_rho") return SetFamily::ARho;
    if (token == "b") return SetFamily::B;
    if (token == "c") return SetFamily::C;
    if (token == "m") return SetFamily::M;
    if (token == "mh") return SetFamily::MH;
    if (token == "orbk") return SetFamily::OrbK;
    require(false, "unknown set family token: " + token);
    return SetFamily::S;
}

std::string verdict_token(Verdict v) {
    switch (v) {
        case Verdict::DefinitelyIn: return "definitely_in";
        case Verdict::DefinitelyNot: return "definitely_not";
        case Verdict::Unknown: return "unknown";
    }
    ensure(false, "unhandled verdict token");
    return {};
}

BsetParams bset_params(int d, int r, int a) {
    require(r >= 1, "rank parameter must be at least 1");
    require(d >= 0, "grade must be nonnegative");
    require(a >= 0 && a <= r * d, "index sum out of range");
    return {a / r, a % r};
}

std::vector<int> bset_row_profile(int d, int r, int a) {
    BsetParams bp = bset_params(d, r, a);
    std::vector<int> out;
    for (int i = 0; i < bp.t_r; ++i) out.push_back(bp.d_r + 1);
    for (int i = bp.t_r; i < r; ++i) out.push_back(bp.d_r);
    return out;
}

Membership check_membership(const PolyMatrix& p, const SetDescriptor& desc,
                            const std::optional<FactorizationWitness>& witness) {
    validate_descriptor(p, desc);

    std::string prefix;
    if (witness.has_value()) {
        std::optional<std::string> viol = witness_violation(p, desc, *witness);
        if (!viol.has_value())
            return {Verdict::DefinitelyIn, "witness verified against the family conditions",
                    witness};
        prefix = "witness rejected (" + *viol + "); ";
    }

    switch (desc.family) {
        case SetFamily::S: return decide_s(p, desc, prefix);
        case SetFamily::OrbK: return decide_orbk(p, desc, prefix);
        default: return screen_family(p, desc, prefix);
    }
}

PerturbedWitness pad_to_equality(const FactorizationWitness& w, int d, const Rational& eps) {
    require(eps.sign() > 0, "epsilon must be positive");
    require(d >= 1, "target degree must be at least 1");
    int r = w.l.cols();
    require(w.r.rows() == r, "witness inner dimensions must agree");
    require(r >= 1, "witness must have at least one inner index");

    std::vector<Degree> dl = w.l.degree_profile(Orientation::Columns);
    std::vector<Degree> dr = w.r.degree_profile(Orientation::Rows);
    const Degree dd = Degree::of(d);
    for (int i = 0; i < r; ++i) {
        require(dl[i] <= dd, "left column degree exceeds the target");
        require(dr[i] <= dd, "right row degree exceeds the target");
        require(dl[i] + dr[i] <= dd, "per-index degree sum exceeds the target");
        if (!dr[i].is_finite())
            require(!dl[i].is_finite(),
                    "left column must be zero wherever the right row is zero");
    }

    PolyMatrix l = w.l;
    PolyMatrix rr = w.r;
    for (int j = 0; j < r; ++j) {
        if (dl[j] + dr[j] == dd) continue;
        if (dr[j].is_finite()) {
            // Raise the column degree by adding an eps-scaled monomial in the
            // first coordinate direction.  All entries of the column sit
            // strictly below the new power, so no cancellation can occur.
            l.set(0, j, l.at(0, j) + Poly::monomial(d - dr[j].value(), eps));
        } else {
            l.set(0, j, Poly::monomial(d, eps));
            rr.set(j, 0, Poly::constant(eps));
        }
    }

    std::vector<Degree> dl2 = l.degree_profile(Orientation::Columns);
    std::vector<Degree> dr2 = rr.degree_profile(Orientation::Rows);
    for (int i = 0; i < r; ++i)
        ensure(dl2[i] + dr2[i] == dd, "padding must land every degree sum on the target");

    Rational dist = pm_distance_sq(w.l.multiply(w.r), l.multiply(rr));
    PerturbedWitness out{{at_natural_grade(l), at_natural_grade(rr)}, dist, {dist}, dist};
    return out;
}

PerturbedWitness redistribute_degrees(const FactorizationWitness& w, int j, int k,
                                      const Rational& eps) {
    require(eps.sign() > 0, "epsilon must be positive");
    int r = w.l.cols();
    require(w.r.rows() == r, "witness inner dimensions must agree");
    require(j >= 1 && j <= r && k >= 1 && k <= r && j != k,
            "row indices must be distinct and within 1..r");

    std::vector<Degree> dl = w.l.degree_profile(Orientation::Columns);
    std::vector<Degree> dr = w.r.degree_profile(Orientation::Rows);
    for (int i = 0; i < r; ++i)
        require(dl[i].is_finite() && dr[i].is_finite(),
                "witness must have no zero columns or rows");
    int d = dl[0].value() + dr[0].value();
    for (int i = 0; i < r; ++i)
        require(dl[i].value() + dr[i].value() == d, "per-index degree sums must all be equal");
    int rho_j = dr[j - 1].value();
    int rho_k = dr[k - 1].value();
    require(rho_j - rho_k >= 2, "the moved row must exceed the receiving row degree by 2");

    // Shift the leading coefficient mass: subtract eps times the top
    // coefficient vector of L column k (a monomial of one degree above the
    // slack) from column j, and add eps times the top coefficient vector of
    // R row j to row k, one degree above its current top.
    PolyMatrix l1 = w.l;
    for (int i = 0; i < w.l.rows(); ++i) {
        Rational wi = w.l.at(i, k - 1).coeff(d - rho_k);
        if (wi.is_zero()) continue;
        l1.set(i, j - 1, l1.at(i, j - 1) - Poly::monomial(d - rho_j + 1, eps * wi));
    }
    PolyMatrix r1 = w.r;
    for (int c = 0; c < w.r.cols(); ++c) {
        Rational vc = w.r.at(j - 1, c).coeff(rho_j);
        if (vc.is_zero()) continue;
        r1.set(k - 1, c, r1.at(k - 1, c) + Poly::monomial(rho_k + 1, eps * vc));
    }
    PolyMatrix perturbed = l1.multiply(r1);

    // Rebalance with a unimodular pair D^{-1}, D placed between the factors:
    // column k of L gains (1/eps) lambda^{rho_j - rho_k - 1} times column j,
    // row j of R loses the same multiple of row k, cancelling both top terms.
    Poly shift = Poly::monomial(rho_j - rho_k - 1, eps.reciprocal());
    PolyMatrix l_out = l1;
    l_out.axpy_col(k - 1, j - 1, shift);
    PolyMatrix r_out = r1;
    r_out.axpy_row(j - 1, k - 1, -shift);
    ensure(l_out.multiply(r_out).same_entries(perturbed),
           "rebalancing must preserve the perturbed product");

    std::vector<Degree> dr_out = r_out.degree_profile(Orientation::Rows);
    std::vector<Degree> dl_out = l_out.degree_profile(Orientation::Columns);
    for (int i = 0; i < r; ++i) {
        int want_row = i == j - 1 ? rho_j - 1 : (i == k - 1 ? rho_k + 1 : dr[i].value());
        if (!(dr_out[i] == Degree::of(want_row) && dl_out[i] == Degree::of(d - want_row)))
            throw epsilon_too_large("row degree profile " + degree_list(dr_out)
                                    + " after redistribution");
    }

    Rational dist = pm_distance_sq(w.l.multiply(w.r), perturbed);
    PerturbedWitness out{{at_natural_grade(l_out), at_natural_grade(r_out)}, dist, {dist}, dist};
    return out;
}

PerturbedWitness homogenize_degrees(const FactorizationWitness& w, const Rational& eps) {
    require(eps.sign() > 0, "epsilon must be positive");
    int r = w.l.cols();
    require(w.r.rows() == r, "witness inner dimensions must agree");
    require(r >= 1, "witness must have at least one inner index");

    std::vector<Degree> dl = w.l.degree_profile(Orientation::Columns);
    std::vector<Degree> dr = w.r.degree_profile(Orientation::Rows);
    for (int i = 0; i < r; ++i)
        require(dl[i].is_finite() && dr[i].is_finite(),
                "witness must have no zero columns or rows");
    int d = dl[0].value() + dr[0].value();
    for (int i = 0; i < r; ++i)
        require(dl[i].value() + dr[i].value() == d, "per-index degree sums must all be equal");

    int a = 0;
    for (int i = 0; i < r; ++i) a += dr[i].value();
    std::vector<int> target = sorted(bset_row_profile(d, r, a));

    PolyMatrix original = w.l.multiply(w.r);
    FactorizationWitness cur = w;
    std::vector<Rational> step_dists;
    Rational slice = eps;
    const int max_steps = r * d * d + 2;
    for (int step = 0; step <= max_steps; ++step) {
        std::vector<int> rho = finite_values(cur.r.degree_profile(Orientation::Rows));
        if (sorted(rho) == target) break;
        ensure(step < max_steps, "homogenization failed to reach the profile");

        int jmax = 0, kmin = 0;
        for (int i = 1; i < r; ++i) {
            if (rho[i] > rho[jmax]) jmax = i;
            if (rho[i] < rho[kmin]) kmin = i;
        }
        ensure(rho[jmax] - rho[kmin] >= 2, "an unbalanced profile must have a wide pair");

        slice = slice * Rational(1, 2);
        Rational step_eps = slice;
        for (int tries = 0;; ++tries) {
            try {
                PerturbedWitness res = redistribute_degrees(cur, jmax + 1, kmin + 1, step_eps);
                step_dists.push_back(res.distance_sq);
                cur = res.witness;
                break;
            } catch (const epsilon_too_large&) {
                ensure(tries < 200, "could not find a small enough step epsilon");
                step_eps = step_eps * Rational(1, 2);
            }
        }
    }

    Rational total = pm_distance_sq(original, cur.l.multiply(cur.r));
    Rational bound = 0;
    for (const Rational& s : step_dists) bound += s;
    bound = bound * Rational(static_cast<long>(step_dists.size()));
    ensure(total <= bound || total.is_zero(), "displacement bound must dominate the total");

    return {cur, total, step_dists, bound};
}

} // namespace polyrank
