// ternary.cpp — see ternary.hpp.
#include "pfrep/ternary.hpp"

#include "pfrep/quadform.hpp"

namespace pfrep {

namespace {

void require_ternary(const MultiPoly& C) {
    for (const auto& [e, c] : C.terms())
        if (e[3] != 0) fail(errc::wrong_size, "form is not ternary (x3 appears): " + C.str());
}

} // namespace

MultiPoly hessian3(const MultiPoly& C) {
    require_ternary(C);
    std::vector<std::vector<MultiPoly>> h(3, std::vector<MultiPoly>(3, MultiPoly(C.field())));
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) h[i][j] = C.derivative(i).derivative(j);
    auto H = [&](int i, int j) -> const MultiPoly& { return i <= j ? h[i][j] : h[j][i]; };
    return H(0, 0) * (H(1, 1) * H(2, 2) - H(1, 2) * H(1, 2)) -
           H(0, 1) * (H(0, 1) * H(2, 2) - H(1, 2) * H(0, 2)) +
           H(0, 2) * (H(0, 1) * H(1, 2) - H(1, 1) * H(0, 2));
}

MultiPoly squarefree_part3(const MultiPoly& C) {
    require_ternary(C);
    if (!C.is_homogeneous(3) || C.is_zero())
        fail(errc::not_cubic, "squarefree part is defined here for ternary cubics only");
    // A repeated factor of C divides every partial derivative, and the first
    // nonzero partial is a quadric of rank <= 2 in that case. Its linear
    // factors over the coefficient field are the only candidates (a repeated
    // factor of a cubic is always rational over the field of the cubic).
    MultiPoly Q(C.field());
    for (int i = 0; i < 3; ++i) {
        Q = C.derivative(i);
        if (!Q.is_zero()) break;
    }
    if (quadric_rank(Q) > 2) return C;
    auto split = split_low_rank_quadric(Q, /*allow_extension=*/false);
    if (!split) return C;
    std::vector<MultiPoly> cands{split->l1};
    if (split->l2 != split->l1) cands.push_back(split->l2);
    for (const MultiPoly& lf : cands) {
        std::vector<AN> l = linear_coeffs(lf);
        auto [q1, r1] = divmod_linear(C, l);
        if (!r1.is_zero()) continue;
        auto [q2, r2] = divmod_linear(q1, l);
        if (!r2.is_zero()) continue; // a simple factor does not break squarefreeness
        auto [q3, r3] = divmod_linear(q2, l);
        (void)q3;
        if (r3.is_zero()) return lf; // C = c * l^3
        return lf * q2;              // C = l^2 * q2 with l not dividing q2
    }
    return C;
}

bool totally_reducible3(const MultiPoly& C) {
    require_ternary(C);
    if (!C.is_homogeneous(3) || C.is_zero())
        fail(errc::not_cubic, "total reducibility is defined here for ternary cubics only");
    MultiPoly s = squarefree_part3(C);
    // a repeated factor forces the remaining factor to be linear as well
    if (s.deg() < 3) return true;
    MultiPoly H = hessian3(s);
    if (H.is_zero()) return true; // three concurrent lines
    const auto& lead = s.terms().begin()->first;
    AN lambda = H.coeff(lead) / s.coeff(lead);
    if (lambda.is_zero()) return false;
    return H == s.scaled(lambda);
}

PlaneSection restrict_to_plane(const MultiPoly& F, const std::vector<AN>& pi) {
    if (pi.size() != 4) fail(errc::wrong_size, "plane needs four coefficients");
    FieldPtr f = F.field()->is_rational() ? field_of(pi) : F.field();
    Mat row(1, 4, f);
    bool nonzero = false;
    for (int j = 0; j < 4; ++j) {
        row.at(0, j) = pi[static_cast<size_t>(j)];
        nonzero = nonzero || !pi[static_cast<size_t>(j)].is_zero();
    }
    if (!nonzero) fail(errc::zero_form, "plane coefficients are all zero");
    Mat basis = row.kernel(); // 4 x 3, deterministic echelon form
    // Rescale each basis column over an extension: the echelon form divides
    // by the pivot, whose norm denominator would otherwise triple the digit
    // size of every coefficient of the restricted polynomial. A column scale
    // only rescales the section's variables, which no caller depends on.
    if (!f->is_rational()) {
        for (int c = 0; c < basis.cols(); ++c) {
            std::vector<AN> col;
            for (int r = 0; r < basis.rows(); ++r) col.push_back(basis.at(r, c));
            content_reduce(f, col);
            for (int r = 0; r < basis.rows(); ++r) basis.at(r, c) = col[static_cast<size_t>(r)];
        }
    }
    return PlaneSection{F.substituted(basis), basis};
}

} // namespace pfrep
