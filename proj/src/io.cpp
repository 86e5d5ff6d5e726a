#include "polyrank/io.hpp"

#include <gmpxx.h>

#include <json.hpp>

#include "polyrank/eigenstructure.hpp"
#include "polyrank/errors.hpp"
#include "polyrank/sampling.hpp"
#include "polyrank/smith.hpp"

namespace polyrank {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
    throw input_error(where + ": " + msg);
}

long long integer_field(const json& j, const std::string& where, const std::string& key) {
    if (!j.contains(key)) fail(where, "missing field \"" + key + "\"");
    const json& v = j.at(key);
    if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
    return v.get<long long>();
}

int bounded_int(const json& j, const std::string& where, const std::string& key, long long lo,
                long long hi) {
    long long v = integer_field(j, where, key);
    if (v < lo || v > hi)
        fail(where + "." + key, "value " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
}

PolyMatrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    for (const auto& item : j.items()) {
        const std::string& key = item.key();
        if (key != "m" && key != "n" && key != "grade" && key != "entries")
            fail(where, "unexpected field \"" + key + "\"");
    }
    int m = bounded_int(j, where, "m", 1, 4096);
    int n = bounded_int(j, where, "n", 1, 4096);
    int grade = bounded_int(j, where, "grade", 0, 1 << 20);
    if (!j.contains("entries")) fail(where, "missing field \"entries\"");
    const json& entries = j.at("entries");
    if (!entries.is_array()) fail(where + ".entries", "expected a list of coefficient lists");
    if (static_cast<long long>(entries.size()) != static_cast<long long>(m) * n)
        fail(where + ".entries", "expected " + std::to_string(static_cast<long long>(m) * n)
                                     + " polynomials, found " + std::to_string(entries.size()));

    std::vector<std::vector<Poly>> rows(m, std::vector<Poly>(n));
    for (int i = 0; i < m; ++i) {
        for (int c = 0; c < n; ++c) {
            const std::string at =
                where + ".entries[" + std::to_string(i * n + c) + "]";
            const json& cl = entries.at(i * n + c);
            if (!cl.is_array()) fail(at, "expected a coefficient list");
            std::vector<Rational> cs;
            cs.reserve(cl.size());
            for (size_t k = 0; k < cl.size(); ++k) {
                const json& coeff = cl.at(k);
                if (!coeff.is_string())
                    fail(at + "[" + std::to_string(k) + "]", "expected a rational string");
                try {
                    cs.push_back(Rational::from_string(coeff.get<std::string>()));
                } catch (const input_error& e) {
                    fail(at + "[" + std::to_string(k) + "]", e.what());
                }
            }
            rows[i][c] = Poly(std::move(cs));
        }
    }
    PolyMatrix mat = PolyMatrix::from_rows(rows);
    if (!(Degree::of(grade) >= mat.degree() || mat.degree() == Degree::neg_inf()))
        fail(where + ".grade", "grade " + std::to_string(grade)
                                   + " is below the actual degree " + mat.degree().to_string());
    return mat.with_grade(grade);
}

json matrix_to_json(const PolyMatrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        for (int c = 0; c < m.cols(); ++c) {
            json cl = json::array();
            for (const Rational& q : m.at(i, c).coeffs()) cl.push_back(q.to_string());
            entries.push_back(std::move(cl));
        }
    }
    json doc;
    doc["m"] = m.rows();
    doc["n"] = m.cols();
    doc["grade"] = m.grade();
    doc["entries"] = std::move(entries);
    return doc;
}

std::string finish(const json& doc) { return doc.dump(2) + "\n"; }

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("invalid document: ") + e.what());
    }
}

json poly_to_json(const Poly& p) {
    json cl = json::array();
    for (const Rational& q : p.coeffs()) cl.push_back(q.to_string());
    json doc;
    doc["coeffs"] = std::move(cl);
    doc["display"] = p.to_display();
    return doc;
}

json poly_list_to_json(const std::vector<Poly>& ps) {
    json out = json::array();
    for (const Poly& p : ps) out.push_back(poly_to_json(p));
    return out;
}

json degree_to_json(const Degree& d) {
    if (d.is_finite()) return json(d.value());
    return json("-inf");
}

json degree_list_to_json(const std::vector<Degree>& ds) {
    json out = json::array();
    for (const Degree& d : ds) out.push_back(degree_to_json(d));
    return out;
}

json witness_to_json(const FactorizationWitness& w) {
    json doc;
    doc["l"] = matrix_to_json(w.l);
    doc["r"] = matrix_to_json(w.r);
    return doc;
}

json eigenstructure_to_json(const Eigenstructure& es) {
    bool free = true;
    for (const Poly& e : es.invariants)
        if (!e.is_one()) free = false;
    for (int g : es.inf_mults)
        if (g != 0) free = false;
    json doc;
    doc["rank"] = es.rank;
    doc["grade"] = es.grade;
    doc["invariants"] = poly_list_to_json(es.invariants);
    doc["infinite_multiplicities"] = es.inf_mults;
    doc["left_indices"] = es.left_indices;
    doc["right_indices"] = es.right_indices;
    doc["eigenvalue_free"] = free;
    return doc;
}

json factor_report_to_json(const FactorizationReport& rep) {
    json doc;
    doc["product_ok"] = rep.product_ok;
    doc["l_minimal"] = rep.l_minimal;
    doc["r_minimal"] = rep.r_minimal;
    doc["l_column_reduced"] = rep.l_column_reduced;
    doc["r_row_reduced"] = rep.r_row_reduced;
    doc["column_degrees"] = degree_list_to_json(rep.column_degrees);
    doc["row_degrees"] = degree_list_to_json(rep.row_degrees);
    doc["predictable_degree"] = degree_to_json(rep.predictable_degree);
    doc["predictable_matches_degree"] = rep.predictable_matches_degree;
    doc["degree_sum_matches_grade"] = rep.degree_sum_matches_grade;
    return doc;
}

std::string factor_kind_token(FactorKind kind) {
    switch (kind) {
        case FactorKind::SmithRank: return "smith";
        case FactorKind::LcER: return "lcer";
        case FactorKind::LcR: return "lcr";
        case FactorKind::LRr: return "lrr";
    }
    ensure(false, "unhandled factor kind token");
    return {};
}

} // namespace

PolyMatrix parse_matrix_document(const std::string& text) {
    return matrix_from_json(parse_document(text), "matrix");
}

std::string emit_matrix_document(const PolyMatrix& m) { return finish(matrix_to_json(m)); }

FactorizationWitness parse_witness_document(const std::string& text) {
    json doc = parse_document(text);
    if (!doc.is_object()) fail("witness", "expected an object");
    for (const auto& item : doc.items()) {
        const std::string& key = item.key();
        if (key != "l" && key != "r") fail("witness", "unexpected field \"" + key + "\"");
    }
    if (!doc.contains("l")) fail("witness", "missing field \"l\"");
    if (!doc.contains("r")) fail("witness", "missing field \"r\"");
    FactorizationWitness w{matrix_from_json(doc.at("l"), "witness.l"),
                           matrix_from_json(doc.at("r"), "witness.r")};
    require(w.l.cols() == w.r.rows(), "witness inner dimensions must agree");
    return w;
}

std::string emit_witness_document(const FactorizationWitness& w) {
    return finish(witness_to_json(w));
}

std::string decimal_sqrt_display(const Rational& squared) {
    require(squared.sign() >= 0, "cannot display the square root of a negative value");
    if (squared.is_zero()) return "0";
    mpf_class x(squared.raw(), 256);
    mpf_class root = sqrt(x);
    mp_exp_t expo = 0;
    std::string digits = root.get_str(expo, 10, 20);
    while (digits.size() < 20) digits += '0';
    if (expo <= 0) return "0." + std::string(static_cast<size_t>(-expo), '0') + digits;
    if (expo < 20)
        return digits.substr(0, static_cast<size_t>(expo)) + "."
               + digits.substr(static_cast<size_t>(expo));
    return digits + std::string(static_cast<size_t>(expo) - 20, '0');
}

SubspaceKind parse_subspace_token(const std::string& token) {
    if (token == "left-null") return SubspaceKind::LeftNullspace;
    if (token == "right-null") return SubspaceKind::RightNullspace;
    if (token == "row") return SubspaceKind::RowSpace;
    if (token == "col") return SubspaceKind::ColSpace;
    require(false, "unknown subspace token: " + token);
    return SubspaceKind::RowSpace;
}

FactorKind parse_factor_kind_token(const std::string& token) {
    if (token == "smith") return FactorKind::SmithRank;
    if (token == "lcer") return FactorKind::LcER;
    if (token == "lcr") return FactorKind::LcR;
    if (token == "lrr") return FactorKind::LRr;
    require(false, "unknown factorization kind token: " + token);
    return FactorKind::SmithRank;
}

std::string report_smith(const PolyMatrix& p) {
    SmithExtended s = smith_decompose_extended(p);
    json doc;
    doc["rank"] = s.rank;
    doc["invariants"] = poly_list_to_json(s.invariants);
    doc["u"] = matrix_to_json(s.u);
    doc["s"] = matrix_to_json(s.s(p.rows(), p.cols()));
    doc["v"] = matrix_to_json(s.v);
    return finish(doc);
}

std::string report_minimal_basis(const PolyMatrix& p, SubspaceKind kind) {
    MinimalBasis b = [&] {
        switch (kind) {
            case SubspaceKind::LeftNullspace: return left_nullspace_minimal_basis(p);
            case SubspaceKind::RightNullspace: return right_nullspace_minimal_basis(p);
            case SubspaceKind::RowSpace: return row_space_minimal_basis(p);
            case SubspaceKind::ColSpace: return col_space_minimal_basis(p);
        }
        ensure(false, "unhandled subspace kind");
        return left_nullspace_minimal_basis(p);
    }();
    const char* token = kind == SubspaceKind::LeftNullspace    ? "left-null"
                        : kind == SubspaceKind::RightNullspace ? "right-null"
                        : kind == SubspaceKind::RowSpace       ? "row"
                                                               : "col";
    json doc;
    doc["space"] = token;
    doc["orientation"] = b.orientation == Orientation::Columns ? "columns" : "rows";
    doc["basis"] = matrix_to_json(b.matrix);
    doc["degrees"] = b.degrees;
    return finish(doc);
}

std::string report_factor(const PolyMatrix& p, FactorKind kind) {
    RankFactorization f = kind == FactorKind::SmithRank ? smith_rank_factorization(p)
                                                        : minimal_rank_factorization(p, kind);
    FactorizationReport rep = verify_factorization(p, f.l, f.e, f.r);
    json doc;
    doc["kind"] = factor_kind_token(kind);
    doc["l"] = matrix_to_json(f.l);
    doc["e"] = f.e.has_value() ? matrix_to_json(*f.e) : json(nullptr);
    doc["r"] = matrix_to_json(f.r);
    doc["report"] = factor_report_to_json(rep);
    return finish(doc);
}

std::string report_eigenstructure(const PolyMatrix& p) {
    return finish(eigenstructure_to_json(complete_eigenstructure(p)));
}

std::string report_classify(const PolyMatrix& p, int r) {
    Eigenstructure es = complete_eigenstructure(p);
    std::optional<int> a = classify_orbit(p, r);
    json doc;
    doc["rank_parameter"] = r;
    doc["classified"] = a.has_value();
    doc["index_sum"] = a.has_value() ? json(*a) : json(nullptr);
    doc["eigenstructure"] = eigenstructure_to_json(es);
    return finish(doc);
}

std::string report_distance(const PolyMatrix& a, const PolyMatrix& b) {
    Rational d2 = pm_distance_sq(a, b);
    json doc;
    doc["distance_sq"] = d2.to_string();
    doc["distance"] = decimal_sqrt_display(d2);
    return finish(doc);
}

VerifyOutcome report_verify(const PolyMatrix& p, const PolyMatrix& l,
                            const std::optional<PolyMatrix>& e, const PolyMatrix& r) {
    FactorizationReport rep = verify_factorization(p, l, e, r);
    return {finish(factor_report_to_json(rep)), rep.product_ok};
}

MembershipOutcome report_membership(const PolyMatrix& p, const SetDescriptor& desc,
                                    const std::optional<FactorizationWitness>& witness) {
    Membership res = check_membership(p, desc, witness);
    json doc;
    doc["family"] = family_token(desc.family);
    doc["m"] = desc.m;
    doc["n"] = desc.n;
    doc["d"] = desc.d;
    doc["r"] = desc.r;
    doc["a"] = desc.a.has_value() ? json(*desc.a) : json(nullptr);
    doc["rho"] = desc.rho.has_value() ? json(*desc.rho) : json(nullptr);
    doc["verdict"] = verdict_token(res.verdict);
    doc["evidence"] = res.evidence;
    doc["witness"] = res.witness.has_value() ? witness_to_json(*res.witness) : json(nullptr);
    return {finish(doc), res.verdict};
}

std::string report_sample(SetFamily family, int m, int n, int d, int r, int a,
                          unsigned long long seed, int bound, int max_attempts) {
    require(family == SetFamily::B || family == SetFamily::MH,
            "sampling supports only the profile and heart families");
    SampleResult res = family == SetFamily::B
                           ? sample_b_member(m, n, d, r, a, seed, bound)
                           : sample_mh_member(m, n, d, r, a, seed, bound, max_attempts);
    json doc;
    doc["family"] = family_token(family);
    doc["m"] = m;
    doc["n"] = n;
    doc["d"] = d;
    doc["r"] = r;
    doc["a"] = a;
    doc["seed"] = seed;
    doc["bound"] = bound;
    doc["max_attempts"] = max_attempts;
    doc["attempts"] = res.attempts;
    doc["witness"] = witness_to_json(res.witness);
    doc["product"] = matrix_to_json(res.product);
    return finish(doc);
}

std::string report_perturb(const FactorizationWitness& w, const PerturbRequest& req) {
    PerturbedWitness res = [&] {
        if (req.op == "pad") {
            require(req.grade.has_value(), "pad needs a target degree");
            return pad_to_equality(w, *req.grade, req.epsilon);
        }
        if (req.op == "redistribute") {
            require(req.j.has_value() && req.k.has_value(),
                    "redistribute needs the two row indices");
            return redistribute_degrees(w, *req.j, *req.k, req.epsilon);
        }
        require(req.op == "homogenize", "unknown perturb operation: " + req.op);
        return homogenize_degrees(w, req.epsilon);
    }();
    json steps = json::array();
    for (const Rational& s : res.step_distances_sq) steps.push_back(s.to_string());
    json doc;
    doc["op"] = req.op;
    doc["epsilon"] = req.epsilon.to_string();
    doc["grade"] = req.grade.has_value() ? json(*req.grade) : json(nullptr);
    doc["j"] = req.j.has_value() ? json(*req.j) : json(nullptr);
    doc["k"] = req.k.has_value() ? json(*req.k) : json(nullptr);
    doc["witness"] = witness_to_json(res.witness);
    doc["product"] = matrix_to_json(res.witness.l.multiply(res.witness.r));
    doc["distance_sq"] = res.distance_sq.to_string();
    doc["distance"] = decimal_sqrt_display(res.distance_sq);
    doc["step_distances_sq"] = std::move(steps);
    doc["distance_sq_bound"] = res.distance_sq_bound.to_string();
    return finish(doc);
}

} // namespace polyrank
