#include "polyrank.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "polyrank/errors.hpp"
#include "polyrank/io.hpp"

struct prx_matrix {
    polyrank::PolyMatrix value;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs the body, converting exceptions to status codes and capturing the
// message for prx_last_error.
template <typename F>
prx_status guarded(F&& body) {
    try {
        body();
        return PRX_OK;
    } catch (const polyrank::attempts_exhausted& e) {
        g_last_error = e.what();
        return PRX_ERR_EXHAUSTED;
    } catch (const polyrank::input_error& e) {
        g_last_error = e.what();
        return PRX_ERR_INPUT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PRX_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return PRX_ERR_INTERNAL;
    }
}

prx_status bad_argument(const char* what) {
    g_last_error = std::string("null argument: ") + what;
    return PRX_ERR_INPUT;
}

prx_status emit_to(char** out, const std::string& text) {
    char* copy = dup_string(text);
    if (copy == nullptr) {
        g_last_error = "out of memory";
        return PRX_ERR_INTERNAL;
    }
    *out = copy;
    return PRX_OK;
}

} // namespace

extern "C" {

const char* prx_last_error(void) { return g_last_error.c_str(); }

void prx_string_free(char* s) { std::free(s); }

prx_status prx_matrix_parse(const char* text, prx_matrix** out) {
    if (text == nullptr) return bad_argument("text");
    if (out == nullptr) return bad_argument("out");
    return guarded([&] {
        auto* handle = new prx_matrix{polyrank::parse_matrix_document(text)};
        *out = handle;
    });
}

void prx_matrix_free(prx_matrix* m) { delete m; }

prx_status prx_matrix_emit(const prx_matrix* m, char** out_text) {
    if (m == nullptr) return bad_argument("m");
    if (out_text == nullptr) return bad_argument("out_text");
    prx_status rc = PRX_OK;
    prx_status run = guarded(
        [&] { rc = emit_to(out_text, polyrank::emit_matrix_document(m->value)); });
    return run != PRX_OK ? run : rc;
}

prx_status prx_matrix_dims(const prx_matrix* m, int* out_rows, int* out_cols, int* out_grade) {
    if (m == nullptr) return bad_argument("m");
    if (out_rows == nullptr || out_cols == nullptr || out_grade == nullptr)
        return bad_argument("out dims");
    *out_rows = m->value.rows();
    *out_cols = m->value.cols();
    *out_grade = m->value.grade();
    return PRX_OK;
}

prx_status prx_smith(const prx_matrix* p, char** out_report) {
    if (p == nullptr) return bad_argument("p");
    if (out_report == nullptr) return bad_argument("out_report");
    prx_status rc = PRX_OK;
    prx_status run =
        guarded([&] { rc = emit_to(out_report, polyrank::report_smith(p->value)); });
    return run != PRX_OK ? run : rc;
}

prx_status prx_minimal_basis(const prx_matrix* p, const char* space, char** out_report) {
    if (p == nullptr) return bad_argument("p");
    if (space == nullptr) return bad_argument("space");
    if (out_report == nullptr) return bad_argument("out_report");
    prx_status rc = PRX_OK;
    prx_status run = guarded([&] {
        polyrank::SubspaceKind kind = polyrank::parse_subspace_token(space);
        rc = emit_to(out_report, polyrank::report_minimal_basis(p->value, kind));
    });
    return run != PRX_OK ? run : rc;
}

prx_status prx_factor(const prx_matrix* p, const char* kind, char** out_report) {
    if (p == nullptr) return bad_argument("p");
    if (kind == nullptr) return bad_argument("kind");
    if (out_report == nullptr) return bad_argument("out_report");
    prx_status rc = PRX_OK;
    prx_status run = guarded([&] {
        polyrank::FactorKind k = polyrank::parse_factor_kind_token(kind);
        rc = emit_to(out_report, polyrank::report_factor(p->value, k));
    });
    return run != PRX_OK ? run : rc;
}

prx_status prx_eigenstructure(const prx_matrix* p, char** out_report) {
    if (p == nullptr) return bad_argument("p");
    if (out_report == nullptr) return bad_argument("out_report");
    prx_status rc = PRX_OK;
    prx_status run =
        guarded([&] { rc = emit_to(out_report, polyrank::report_eigenstructure(p->value)); });
    return run != PRX_OK ? run : rc;
}

prx_status prx_classify(const prx_matrix* p, int rank, char** out_report) {
    if (p == nullptr) return bad_argument("p");
    if (out_report == nullptr) return bad_argument("out_report");
    prx_status rc = PRX_OK;
    prx_status run =
        guarded([&] { rc = emit_to(out_report, polyrank::report_classify(p->value, rank)); });
    return run != PRX_OK ? run : rc;
}

prx_status prx_distance_sq(const prx_matrix* a, const prx_matrix* b, char** out_report) {
    if (a == nullptr) return bad_argument("a");
    if (b == nullptr) return bad_argument("b");
    if (out_report == nullptr) return bad_argument("out_report");
    prx_status rc = PRX_OK;
    prx_status run = guarded(
        [&] { rc = emit_to(out_report, polyrank::report_distance(a->value, b->value)); });
    return run != PRX_OK ? run : rc;
}

prx_status prx_verify(const prx_matrix* p, const prx_matrix* l, const prx_matrix* e,
                      const prx_matrix* r, int* out_product_ok, char** out_report) {
    if (p == nullptr) return bad_argument("p");
    if (l == nullptr) return bad_argument("l");
    if (r == nullptr) return bad_argument("r");
    if (out_product_ok == nullptr) return bad_argument("out_product_ok");
    if (out_report == nullptr) return bad_argument("out_report");
    prx_status rc = PRX_OK;
    prx_status run = guarded([&] {
        std::optional<polyrank::PolyMatrix> middle;
        if (e != nullptr) middle = e->value;
        polyrank::VerifyOutcome outcome =
            polyrank::report_verify(p->value, l->value, middle, r->value);
        rc = emit_to(out_report, outcome.report);
        if (rc == PRX_OK) *out_product_ok = outcome.product_ok ? 1 : 0;
    });
    return run != PRX_OK ? run : rc;
}

prx_status prx_member(const prx_matrix* p, const char* family, int r, const int* a,
                      const int* rho, int rho_len, const char* witness_json,
                      prx_verdict* out_verdict, char** out_report) {
    if (p == nullptr) return bad_argument("p");
    if (family == nullptr) return bad_argument("family");
    if (out_verdict == nullptr) return bad_argument("out_verdict");
    if (out_report == nullptr) return bad_argument("out_report");
    prx_status rc = PRX_OK;
    prx_status run = guarded([&] {
        polyrank::SetDescriptor desc;
        desc.family = polyrank::parse_family_token(family);
        desc.m = p->value.rows();
        desc.n = p->value.cols();
        desc.d = p->value.grade();
        desc.r = r;
        if (a != nullptr) desc.a = *a;
        if (rho != nullptr) {
            polyrank::require(rho_len >= 0, "row degree list length must be nonnegative");
            desc.rho = std::vector<int>(rho, rho + rho_len);
        }
        std::optional<polyrank::FactorizationWitness> witness;
        if (witness_json != nullptr)
            witness = polyrank::parse_witness_document(witness_json);
        polyrank::MembershipOutcome outcome =
            polyrank::report_membership(p->value, desc, witness);
        rc = emit_to(out_report, outcome.report);
        if (rc == PRX_OK) {
            switch (outcome.verdict) {
                case polyrank::Verdict::DefinitelyIn: *out_verdict = PRX_DEFINITELY_IN; break;
                case polyrank::Verdict::DefinitelyNot: *out_verdict = PRX_DEFINITELY_NOT; break;
                case polyrank::Verdict::Unknown: *out_verdict = PRX_UNKNOWN; break;
            }
        }
    });
    return run != PRX_OK ? run : rc;
}

prx_status prx_sample(const char* family, int m, int n, int d, int r, int a,
                      unsigned long long seed, int bound, int max_attempts, char** out_report) {
    if (family == nullptr) return bad_argument("family");
    if (out_report == nullptr) return bad_argument("out_report");
    prx_status rc = PRX_OK;
    prx_status run = guarded([&] {
        polyrank::SetFamily f = polyrank::parse_family_token(family);
        rc = emit_to(out_report,
                     polyrank::report_sample(f, m, n, d, r, a, seed, bound, max_attempts));
    });
    return run != PRX_OK ? run : rc;
}

prx_status prx_perturb(const char* op, const char* witness_json, const char* epsilon,
                       const int* grade, const int* j, const int* k, char** out_report) {
    if (op == nullptr) return bad_argument("op");
    if (witness_json == nullptr) return bad_argument("witness_json");
    if (epsilon == nullptr) return bad_argument("epsilon");
    if (out_report == nullptr) return bad_argument("out_report");
    prx_status rc = PRX_OK;
    prx_status run = guarded([&] {
        polyrank::FactorizationWitness w = polyrank::parse_witness_document(witness_json);
        polyrank::PerturbRequest req;
        req.op = op;
        req.epsilon = polyrank::Rational::from_string(epsilon);
        if (grade != nullptr) req.grade = *grade;
        if (j != nullptr) req.j = *j;
        if (k != nullptr) req.k = *k;
        rc = emit_to(out_report, polyrank::report_perturb(w, req));
    });
    return run != PRX_OK ? run : rc;
}

} // extern "C"
