#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <polyrank.h>

namespace {

int exit_for(prx_status st) {
    switch (st) {
        case PRX_OK: return 0;
        case PRX_ERR_INPUT: return 1;
        case PRX_ERR_EXHAUSTED: return 1;
        case PRX_ERR_INTERNAL: return 3;
    }
    return 3;
}

int fail_with(prx_status st) {
    std::cerr << "error: " << prx_last_error() << "\n";
    return exit_for(st);
}

// Reads a whole file, or standard input when the path is "-".
bool read_input(const std::string& path, std::string& out) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        out = buf.str();
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

struct MatrixHandle {
    prx_matrix* ptr = nullptr;
    MatrixHandle() = default;
    MatrixHandle(const MatrixHandle&) = delete;
    MatrixHandle& operator=(const MatrixHandle&) = delete;
    ~MatrixHandle() { prx_matrix_free(ptr); }
};

struct ReportOut {
    char* s = nullptr;
    ReportOut() = default;
    ReportOut(const ReportOut&) = delete;
    ReportOut& operator=(const ReportOut&) = delete;
    ~ReportOut() { prx_string_free(s); }
};

// Returns 0 on success, an exit code otherwise.
int load_matrix(const std::string& path, MatrixHandle& out) {
    std::string text;
    if (!read_input(path, text)) return 1;
    prx_status st = prx_matrix_parse(text.c_str(), &out.ptr);
    if (st != PRX_OK) return fail_with(st);
    return 0;
}

int run_smith(const std::string& path) {
    MatrixHandle m;
    if (int rc = load_matrix(path, m)) return rc;
    ReportOut rep;
    prx_status st = prx_smith(m.ptr, &rep.s);
    if (st != PRX_OK) return fail_with(st);
    std::cout << rep.s;
    return 0;
}

int run_minbasis(const std::string& path, const std::string& space) {
    MatrixHandle m;
    if (int rc = load_matrix(path, m)) return rc;
    ReportOut rep;
    prx_status st = prx_minimal_basis(m.ptr, space.c_str(), &rep.s);
    if (st != PRX_OK) return fail_with(st);
    std::cout << rep.s;
    return 0;
}

int run_factor(const std::string& path, const std::string& kind) {
    MatrixHandle m;
    if (int rc = load_matrix(path, m)) return rc;
    ReportOut rep;
    prx_status st = prx_factor(m.ptr, kind.c_str(), &rep.s);
    if (st != PRX_OK) return fail_with(st);
    std::cout << rep.s;
    return 0;
}

int run_eig(const std::string& path) {
    MatrixHandle m;
    if (int rc = load_matrix(path, m)) return rc;
    ReportOut rep;
    prx_status st = prx_eigenstructure(m.ptr, &rep.s);
    if (st != PRX_OK) return fail_with(st);
    std::cout << rep.s;
    return 0;
}

int run_classify(const std::string& path, int rank) {
    MatrixHandle m;
    if (int rc = load_matrix(path, m)) return rc;
    ReportOut rep;
    prx_status st = prx_classify(m.ptr, rank, &rep.s);
    if (st != PRX_OK) return fail_with(st);
    std::cout << rep.s;
    return 0;
}

int run_member(const std::string& path, const std::string& family, int rank, bool has_a, int a,
               bool has_rho, const std::vector<int>& rho, const std::string& witness_path) {
    MatrixHandle m;
    if (int rc = load_matrix(path, m)) return rc;
    std::string witness_text;
    const char* witness = nullptr;
    if (!witness_path.empty()) {
        if (!read_input(witness_path, witness_text)) return 1;
        witness = witness_text.c_str();
    }
    const int* ap = has_a ? &a : nullptr;
    const int* rp = has_rho ? rho.data() : nullptr;
    prx_verdict verdict = PRX_UNKNOWN;
    ReportOut rep;
    prx_status st = prx_member(m.ptr, family.c_str(), rank, ap, rp,
                               has_rho ? static_cast<int>(rho.size()) : 0, witness, &verdict,
                               &rep.s);
    if (st != PRX_OK) return fail_with(st);
    std::cout << rep.s;
    return verdict == PRX_DEFINITELY_NOT ? 2 : 0;
}

int run_sample(const std::string& family, const std::vector<int>& params,
               unsigned long long seed, int bound, int max_attempts) {
    if (params.size() != 5) {
        std::cerr << "error: --params needs exactly m,n,d,r,a\n";
        return 1;
    }
    ReportOut rep;
    prx_status st = prx_sample(family.c_str(), params[0], params[1], params[2], params[3],
                               params[4], seed, bound, max_attempts, &rep.s);
    if (st != PRX_OK) return fail_with(st);
    std::cout << rep.s;
    return 0;
}

int run_perturb(const std::string& op, const std::string& witness_path,
                const std::string& epsilon, bool has_grade, int grade, bool has_j, int j,
                bool has_k, int k) {
    std::string witness_text;
    if (!read_input(witness_path, witness_text)) return 1;
    const int* gp = has_grade ? &grade : nullptr;
    const int* jp = has_j ? &j : nullptr;
    const int* kp = has_k ? &k : nullptr;
    ReportOut rep;
    prx_status st =
        prx_perturb(op.c_str(), witness_text.c_str(), epsilon.c_str(), gp, jp, kp, &rep.s);
    if (st != PRX_OK) return fail_with(st);
    std::cout << rep.s;
    return 0;
}

int run_verify(const std::string& p_path, const std::string& l_path, const std::string& e_path,
               const std::string& r_path) {
    MatrixHandle p, l, e, r;
    if (int rc = load_matrix(p_path, p)) return rc;
    if (int rc = load_matrix(l_path, l)) return rc;
    if (!e_path.empty()) {
        if (int rc = load_matrix(e_path, e)) return rc;
    }
    if (int rc = load_matrix(r_path, r)) return rc;
    int product_ok = 0;
    ReportOut rep;
    prx_status st = prx_verify(p.ptr, l.ptr, e.ptr, r.ptr, &product_ok, &rep.s);
    if (st != PRX_OK) return fail_with(st);
    std::cout << rep.s;
    return product_ok ? 0 : 2;
}

int run_dist(const std::string& a_path, const std::string& b_path) {
    MatrixHandle a, b;
    if (int rc = load_matrix(a_path, a)) return rc;
    if (int rc = load_matrix(b_path, b)) return rc;
    ReportOut rep;
    prx_status st = prx_distance_sq(a.ptr, b.ptr, &rep.s);
    if (st != PRX_OK) return fail_with(st);
    std::cout << rep.s;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rank factorizations and eigenstructure of polynomial matrices"};
    app.require_subcommand(1);
    int exit_code = 0;

    auto* smith = app.add_subcommand("smith", "Smith decomposition (U, S, V and invariants)");
    std::string smith_matrix;
    smith->add_option("matrix", smith_matrix, "matrix document path, or - for stdin")
        ->required();
    smith->callback([&] { exit_code = run_smith(smith_matrix); });

    auto* minbasis = app.add_subcommand("minbasis", "Minimal basis of an attached subspace");
    std::string mb_matrix, mb_space;
    minbasis->add_option("--space", mb_space, "left-null, right-null, row, or col")->required();
    minbasis->add_option("matrix", mb_matrix, "matrix document path, or - for stdin")
        ->required();
    minbasis->callback([&] { exit_code = run_minbasis(mb_matrix, mb_space); });

    auto* factor = app.add_subcommand("factor", "Rank factorization with verification report");
    std::string fac_matrix, fac_kind;
    factor->add_option("--kind", fac_kind, "smith, lcer, lcr, or lrr")->required();
    factor->add_option("matrix", fac_matrix, "matrix document path, or - for stdin")->required();
    factor->callback([&] { exit_code = run_factor(fac_matrix, fac_kind); });

    auto* eig = app.add_subcommand("eig", "Complete eigenstructure");
    std::string eig_matrix;
    eig->add_option("matrix", eig_matrix, "matrix document path, or - for stdin")->required();
    eig->callback([&] { exit_code = run_eig(eig_matrix); });

    auto* classify = app.add_subcommand("classify", "Match against the generic structures");
    std::string cls_matrix;
    int cls_rank = 0;
    classify->add_option("--rank", cls_rank, "rank parameter r")->required();
    classify->add_option("matrix", cls_matrix, "matrix document path, or - for stdin")
        ->required();
    classify->callback([&] { exit_code = run_classify(cls_matrix, cls_rank); });

    auto* member = app.add_subcommand("member", "Decide or screen factorization-set membership");
    std::string mem_matrix, mem_family, mem_witness;
    int mem_rank = 0, mem_a = 0;
    std::vector<int> mem_rho;
    member->add_option("--family", mem_family, "s, a, a_a, a_rho, b, c, m, mh, or orbk")
        ->required();
    member->add_option("--rank", mem_rank, "rank parameter r")->required();
    auto* mem_a_opt = member->add_option("--a", mem_a, "right factor row degree sum");
    auto* mem_rho_opt =
        member->add_option("--rho", mem_rho, "prescribed row degrees, comma separated")
            ->delimiter(',');
    member->add_option("--witness", mem_witness, "factorization document path, or -");
    member->add_option("matrix", mem_matrix, "matrix document path, or - for stdin")->required();
    member->callback([&] {
        exit_code = run_member(mem_matrix, mem_family, mem_rank, mem_a_opt->count() > 0, mem_a,
                               mem_rho_opt->count() > 0, mem_rho, mem_witness);
    });

    auto* sample = app.add_subcommand("sample", "Draw a seeded random member factorization");
    std::string smp_family;
    std::vector<int> smp_params;
    unsigned long long smp_seed = 0;
    int smp_bound = 3, smp_attempts = 64;
    sample->add_option("--family", smp_family, "b or mh")->required();
    sample->add_option("--params", smp_params, "m,n,d,r,a")->delimiter(',')->required();
    sample->add_option("--seed", smp_seed, "generator seed")->required();
    sample->add_option("--bound", smp_bound, "coefficient bound (default 3)");
    sample->add_option("--max-attempts", smp_attempts, "rejection limit (default 64)");
    sample->callback(
        [&] { exit_code = run_sample(smp_family, smp_params, smp_seed, smp_bound, smp_attempts); });

    auto* perturb = app.add_subcommand("perturb", "Degree-moving perturbation of a witness");
    std::string prt_op, prt_witness, prt_eps;
    int prt_grade = 0, prt_j = 0, prt_k = 0;
    perturb->add_option("--op", prt_op, "pad, redistribute, or homogenize")->required();
    perturb->add_option("--epsilon", prt_eps, "perturbation size, rational p/q")->required();
    auto* prt_grade_opt = perturb->add_option("--grade", prt_grade, "pad: target degree d");
    auto* prt_j_opt = perturb->add_option("--j", prt_j, "redistribute: source row, 1-based");
    auto* prt_k_opt = perturb->add_option("--k", prt_k, "redistribute: target row, 1-based");
    perturb->add_option("--witness", prt_witness, "factorization document path, or -")
        ->required();
    perturb->callback([&] {
        exit_code = run_perturb(prt_op, prt_witness, prt_eps, prt_grade_opt->count() > 0,
                                prt_grade, prt_j_opt->count() > 0, prt_j,
                                prt_k_opt->count() > 0, prt_k);
    });

    auto* verify = app.add_subcommand("verify", "Check a candidate factorization of a matrix");
    std::string ver_p, ver_l, ver_e, ver_r;
    verify->add_option("--l", ver_l, "left factor document path")->required();
    verify->add_option("--e", ver_e, "middle factor document path");
    verify->add_option("--r", ver_r, "right factor document path")->required();
    verify->add_option("matrix", ver_p, "matrix document path, or - for stdin")->required();
    verify->callback([&] { exit_code = run_verify(ver_p, ver_l, ver_e, ver_r); });

    auto* dist = app.add_subcommand("dist", "Squared coefficient distance of two matrices");
    std::string dst_a, dst_b;
    dist->add_option("a", dst_a, "first matrix document path")->required();
    dist->add_option("b", dst_b, "second matrix document path")->required();
    dist->callback([&] { exit_code = run_dist(dst_a, dst_b); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    return exit_code;
}
