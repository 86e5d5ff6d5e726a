#include "polyrank/factorization.hpp"

#include <algorithm>

#include "polyrank/errors.hpp"
#include "polyrank/smith.hpp"

namespace polyrank {

RankFactorization smith_rank_factorization(const PolyMatrix& p) {
    SmithExtended s = smith_decompose_extended(p);
    require(s.rank >= 1, "rank factorization needs normal rank at least 1");
    RankFactorization f{FactorKind::SmithRank, s.u.select_columns(0, s.rank),
                        PolyMatrix::diagonal(s.invariants), s.v.select_rows(0, s.rank)};
    ensure(f.l.multiply(*f.e).multiply(f.r).same_entries(p), "factorization does not reproduce the input");
    return f;
}

RankFactorization minimal_rank_factorization(const PolyMatrix& p, FactorKind kind) {
    if (kind == FactorKind::SmithRank) return smith_rank_factorization(p);

    SmithExtended s = smith_decompose_extended(p);
    require(s.rank >= 1, "rank factorization needs normal rank at least 1");
    const int r = s.rank;
    PolyMatrix l_raw = s.u.select_columns(0, r);
    PolyMatrix e_mid = PolyMatrix::diagonal(s.invariants);
    PolyMatrix r_raw = s.v.select_rows(0, r);

    // Column-reduce the left factor and row-reduce the right one; the
    // cofactors migrate into the middle.  When the rank fills a dimension
    // the identity is already the canonical basis of the full space, so the
    // raw factor moves to the cofactor side unchanged.
    PolyMatrix lc = PolyMatrix::identity(r);
    PolyMatrix l_cof = l_raw;
    if (r != p.rows()) {
        ColumnReduceResult cr = column_reduce(l_raw);
        lc = cr.reduced;
        l_cof = cr.cofactor;
    }
    PolyMatrix rr = PolyMatrix::identity(r);
    PolyMatrix r_cof = r_raw;
    if (r != p.cols()) {
        RowReduceResult red = row_reduce(r_raw);
        rr = red.reduced;
        r_cof = red.cofactor;
    }

    RankFactorization f{kind, lc, std::nullopt, rr};
    switch (kind) {
    case FactorKind::LcER:
        f.e = l_cof.multiply(e_mid).multiply(r_cof);
        break;
    case FactorKind::LcR:
        f.r = l_cof.multiply(e_mid).multiply(r_raw);
        break;
    case FactorKind::LRr:
        f.l = l_raw.multiply(e_mid).multiply(r_cof);
        break;
    case FactorKind::SmithRank:
        break;
    }
    PolyMatrix prod = f.e ? f.l.multiply(*f.e).multiply(f.r) : f.l.multiply(f.r);
    ensure(prod.same_entries(p), "factorization does not reproduce the input");
    return f;
}

FactorizationReport verify_factorization(const PolyMatrix& p, const PolyMatrix& l,
                                         const std::optional<PolyMatrix>& e, const PolyMatrix& r) {
    require(l.rows() == p.rows(), "left factor row count mismatch");
    require(r.cols() == p.cols(), "right factor column count mismatch");
    if (e) {
        require(e->rows() == l.cols() && e->cols() == r.rows(), "middle factor shape mismatch");
    } else {
        require(l.cols() == r.rows(), "inner dimensions mismatch");
    }

    FactorizationReport rep;
    PolyMatrix prod = e ? l.multiply(*e).multiply(r) : l.multiply(r);
    rep.product_ok = prod.same_entries(p);
    rep.l_column_reduced = l.cols() > 0 && l.is_reduced(Orientation::Columns);
    rep.r_row_reduced = r.rows() > 0 && r.is_reduced(Orientation::Rows);
    rep.l_minimal = is_minimal_basis(l, Orientation::Columns);
    rep.r_minimal = is_minimal_basis(r, Orientation::Rows);
    rep.column_degrees = l.degree_profile(Orientation::Columns);
    rep.row_degrees = r.degree_profile(Orientation::Rows);

    Degree pd = Degree::neg_inf();
    if (e) {
        for (int i = 0; i < l.cols(); ++i)
            for (int j = 0; j < r.rows(); ++j)
                pd = std::max(pd, rep.column_degrees[static_cast<size_t>(i)] + e->at(i, j).degree() +
                                      rep.row_degrees[static_cast<size_t>(j)]);
    } else {
        for (int i = 0; i < l.cols(); ++i)
            pd = std::max(pd, rep.column_degrees[static_cast<size_t>(i)] + rep.row_degrees[static_cast<size_t>(i)]);
    }
    rep.predictable_degree = pd;
    rep.predictable_matches_degree = pd == p.degree();

    int inner = std::min(l.cols(), r.rows());
    for (int i = 0; i < inner; ++i)
        rep.degree_sum_matches_grade.push_back(
            rep.column_degrees[static_cast<size_t>(i)] + rep.row_degrees[static_cast<size_t>(i)] ==
            Degree::of(p.grade()));
    return rep;
}

int degree_lower_bound(const PolyMatrix& p) {
    MinimalIndices mi = minimal_indices(p);
    require(!mi.row_space.empty() && !mi.col_space.empty(), "degree bound needs normal rank at least 1");
    return mi.row_space.back() + mi.col_space.back();
}

} // namespace polyrank
