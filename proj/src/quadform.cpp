// quadform.cpp — see quadform.hpp.
#include "pfrep/quadform.hpp"

#include "pfrep/factor.hpp"

namespace pfrep {

Mat gram_matrix(const MultiPoly& Q) {
    if (!Q.is_homogeneous(2)) fail(errc::wrong_size, "Gram matrix requires a quadratic form");
    Mat g(4, 4, Q.field());
    AN half = AN::of(Q.field(), Rat(1, 2));
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            Expo e{0, 0, 0, 0};
            e[static_cast<size_t>(i)] += 1;
            e[static_cast<size_t>(j)] += 1;
            AN c = Q.coeff(e);
            if (i == j) {
                g.at(i, i) = c;
            } else {
                g.at(i, j) = c * half;
                g.at(j, i) = g.at(i, j);
            }
        }
    return g;
}

int quadric_rank(const MultiPoly& Q) { return gram_matrix(Q).rank(); }

MultiPoly embed_multipoly(const FieldExtension& ext, const MultiPoly& p) {
    MultiPoly r(ext.field);
    for (const auto& [e, c] : p.terms()) r.add_term(e, ext.embed(c));
    return r;
}

std::optional<QuadricFactors> split_low_rank_quadric(const MultiPoly& Q, bool allow_extension) {
    int rank = quadric_rank(Q);
    if (rank == 0) fail(errc::zero_form, "cannot split the zero quadric");
    if (rank > 2) fail(errc::internal, "split requested for a quadric of rank > 2");
    const FieldPtr& K = Q.field();

    // ensure some square term exists; otherwise shear along the first cross term
    int sq = -1;
    for (int i = 0; i < 4 && sq < 0; ++i) {
        Expo e{0, 0, 0, 0};
        e[static_cast<size_t>(i)] = 2;
        if (!Q.coeff(e).is_zero()) sq = i;
    }
    if (sq < 0) {
        const Expo& lead = Q.terms().begin()->first; // a cross term x_k * x_m
        int k = -1, m = -1;
        for (int i = 0; i < 4; ++i)
            if (lead[static_cast<size_t>(i)] == 1) (k < 0 ? k : m) = i;
        Mat A = Mat::identity(4, K);
        A.at(m, k) = AN::one(K); // x_m -> y_m + y_k, so y_k^2 appears
        auto inner = split_low_rank_quadric(Q.substituted(A), allow_extension);
        if (!inner) return std::nullopt;
        Mat Ainv = Mat::identity(4, inner->field);
        Ainv.at(m, k) = -AN::one(inner->field);
        inner->l1 = inner->l1.substituted(Ainv);
        inner->l2 = inner->l2.substituted(Ainv);
        return inner;
    }

    // Lagrange: Q = a*L^2 + R with L = x_sq + B/(2a), R free of x_sq
    Expo esq{0, 0, 0, 0};
    esq[static_cast<size_t>(sq)] = 2;
    AN a = Q.coeff(esq);
    MultiPoly L = MultiPoly::variable(K, sq);
    AN halfinv = AN::of(K, Rat(1, 2)) * a.inverse();
    for (int j = 0; j < 4; ++j) {
        if (j == sq) continue;
        Expo e{0, 0, 0, 0};
        e[static_cast<size_t>(sq)] += 1;
        e[static_cast<size_t>(j)] += 1;
        AN c = Q.coeff(e);
        if (!c.is_zero()) L += MultiPoly::variable(K, j).scaled(c * halfinv);
    }
    MultiPoly R = Q - (L * L).scaled(a);

    if (R.is_zero())
        return QuadricFactors{K, false, FieldExtension{}, a, L, L};

    // R must be rank 1: R = b * l^2
    int j2 = -1;
    AN b = AN::zero(K);
    for (int i = 0; i < 4; ++i) {
        Expo e{0, 0, 0, 0};
        e[static_cast<size_t>(i)] = 2;
        b = R.coeff(e);
        if (!b.is_zero()) {
            j2 = i;
            break;
        }
    }
    if (j2 < 0) fail(errc::internal, "residual of a rank-2 quadric lost its square term");
    MultiPoly l = R.derivative(j2).scaled((b + b).inverse());
    if (R != (l * l).scaled(b)) fail(errc::internal, "rank-2 split found a rank-3 residual");

    // Q = a L^2 + b l^2 = a (L - s l)(L + s l) with s^2 = -b/a
    UniPoly f(K, {b / a, AN::zero(K), AN::one(K)});
    auto roots = roots_in_field(f);
    if (!roots.empty()) {
        AN s = roots.front().first;
        return QuadricFactors{K, false, FieldExtension{}, a, L - l.scaled(s), L + l.scaled(s)};
    }
    if (!allow_extension) return std::nullopt;
    FieldExtension ext = extend_field(f);
    AN s = ext.root;
    MultiPoly Le = embed_multipoly(ext, L), le = embed_multipoly(ext, l);
    return QuadricFactors{ext.field, true, ext, ext.embed(a), Le - le.scaled(s), Le + le.scaled(s)};
}

} // namespace pfrep
