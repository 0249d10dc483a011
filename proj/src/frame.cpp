// frame.cpp — see frame.hpp.
#include "pfrep/frame.hpp"

namespace pfrep {

namespace {

// small builder: linear form c0*x0 + c1*x1 + c2*x2 + c3*x3 from integers
MultiPoly lin4(const FieldPtr& f, long c0, long c1, long c2, long c3) {
    std::vector<AN> c{AN::of(f, Rat(c0)), AN::of(f, Rat(c1)), AN::of(f, Rat(c2)),
                      AN::of(f, Rat(c3))};
    return MultiPoly::linear(f, c);
}

} // namespace

SkewLinearMatrix t_frame_matrix(const FieldPtr& f) {
    SkewLinearMatrix T(5, f);
    T.set(0, 2, lin4(f, 0, 0, 0, -1)); // -x3
    T.set(0, 4, lin4(f, 0, 0, -1, 0)); // -x2
    T.set(1, 2, lin4(f, 0, 0, 0, 1));  // x3
    T.set(1, 3, lin4(f, 1, -1, 0, 0)); // x0 - x1
    T.set(1, 4, lin4(f, 0, 1, 0, 0));  // x1
    T.set(2, 3, lin4(f, 0, 1, 0, -1)); // x1 - x3
    T.set(2, 4, lin4(f, 0, -1, 0, 0)); // -x1
    return T;
}

SkewLinearMatrix t_prime_matrix(const FieldPtr& f) {
    SkewLinearMatrix T(3, f);
    T.set(0, 1, lin4(f, 0, 0, 0, -1)); // -x3
    T.set(0, 2, lin4(f, 0, 0, -1, 0)); // -x2
    T.set(1, 2, lin4(f, 0, -1, 0, 0)); // -x1
    return T;
}

const std::vector<ProjPoint>& standard_frame_points() {
    static const std::vector<ProjPoint> pts = {
        ProjPoint::of_ints({1, 0, 0, 0}), ProjPoint::of_ints({0, 1, 0, 0}),
        ProjPoint::of_ints({0, 0, 1, 0}), ProjPoint::of_ints({0, 0, 0, 1}),
        ProjPoint::of_ints({1, 1, 1, 1})};
    return pts;
}

FrameSystem build_frame_system(const MultiPoly& F, const std::vector<ProjPoint>& pts) {
    if (!F.is_homogeneous(3) || F.is_zero())
        fail(errc::not_cubic, "frame representation needs a nonzero homogeneous cubic");
    if (pts.size() != 5) fail(errc::wrong_size, "a frame consists of five points");
    if (!general_position(pts))
        fail(errc::not_general_position, "frame points must be in general position");

    std::vector<AN> all;
    for (const ProjPoint& p : pts)
        for (const AN& c : p.coords()) all.push_back(c);
    FieldPtr f = field_of(all);
    if (f->is_rational()) f = F.field();

    // lambda: a5 = sum_i lambda_i a^i, all entries nonzero by general
    // position. Only the ratios matter (a global scale of C rescales the
    // Pfaffian system but not its solution set), so take Cramer numerators:
    // no divisions, hence no norm denominators over an extension.
    Mat B(4, 4, f);
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) B.at(r, c) = pts[static_cast<size_t>(c)].coords()[static_cast<size_t>(r)];
    std::vector<AN> lambda;
    for (int i = 0; i < 4; ++i) {
        Mat Bi = B;
        for (int r = 0; r < 4; ++r) Bi.at(r, i) = pts[4].coords()[static_cast<size_t>(r)];
        lambda.push_back(det_by_cofactors(Bi));
    }
    for (const AN& l : lambda)
        if (l.is_zero())
            fail(errc::not_general_position, "frame has four coplanar points");
    Mat C(4, 4, f);
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r)
            C.at(r, c) = lambda[static_cast<size_t>(c)] * pts[static_cast<size_t>(c)].coords()[static_cast<size_t>(r)];
    content_reduce(C);

    // A sends the frame onto the standard points, exactly (so that composing
    // a standard-coordinates solution with A keeps the Pfaffian constant 1).
    // Computed as adjugate over determinant: the cofactors are division-free
    // and only one field inversion of the determinant is needed, instead of
    // one per pivot of an elimination.
    Mat A(4, 4, f);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Mat minor(3, 3, f);
            for (int r = 0, mr = 0; r < 4; ++r) {
                if (r == j) continue;
                for (int c = 0, mc = 0; c < 4; ++c) {
                    if (c == i) continue;
                    minor.at(mr, mc) = C.at(r, c);
                    ++mc;
                }
                ++mr;
            }
            AN cof = det_by_cofactors(minor);
            A.at(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    AN det = AN::zero(f);
    for (int k = 0; k < 4; ++k) det += C.at(k, 0) * A.at(0, k);
    if (det.is_zero()) fail(errc::not_general_position, "frame matrix is singular");
    AN dinv = det.inverse();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) A.at(i, j) *= dinv;

    SkewLinearMatrix T = t_frame_matrix(f).substituted(A);
    std::vector<MultiPoly> subpf = T.sub_pfaffians();

    Mat sys(20, 20, f);
    const auto& mons = MultiPoly::cubic_monomials();
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 4; ++j) {
            MultiPoly col = MultiPoly::variable(f, j) * subpf[static_cast<size_t>(i)];
            if (i % 2 == 1) col = -col;
            for (int row = 0; row < 20; ++row)
                sys.at(row, 4 * i + j) = col.coeff(mons[static_cast<size_t>(row)]);
        }
    }
    return FrameSystem{std::move(sys), F.cubic_coeffs(), std::move(T), std::move(subpf),
                       std::move(A), std::move(C)};
}

FrameRep represent_with_frame(const MultiPoly& F, const std::vector<ProjPoint>& pts,
                              const std::optional<std::vector<Rat>>& family) {
    for (const ProjPoint& p : pts)
        if (!F.eval(p.coords()).is_zero())
            fail(errc::point_not_on_surface, "frame point " + p.str() + " is not on the surface");
    FrameSystem sys = build_frame_system(F, pts);

    // Solve in standard coordinates: with G = F(frame_matrix * u), the system
    // matrix comes from the fixed 5x5 block alone, so its entries are small
    // rationals and the elimination never performs a field inversion on large
    // elements. The solution transports back through the projectivity, which
    // composes with frame_matrix to the identity — the Pfaffian stays exactly F.
    MultiPoly G = F.substituted(sys.frame_matrix);
    FrameSystem std_sys = build_frame_system(G, standard_frame_points());
    std::vector<AN> c = std_sys.A.solve(std_sys.rhs);
    if (family) {
        if (family->size() != 5)
            fail(errc::wrong_size, "a family shift needs five coefficients");
        Mat ker = std_sys.A.kernel();
        if (ker.cols() != 5)
            fail(errc::internal, "frame system kernel has unexpected dimension " +
                                     std::to_string(ker.cols()));
        for (int v = 0; v < 5; ++v) {
            AN k = AN::of(std_sys.A.field(), (*family)[static_cast<size_t>(v)]);
            if (k.is_zero()) continue;
            for (int r = 0; r < 20; ++r) c[static_cast<size_t>(r)] += k * ker.at(r, v);
        }
    }
    std::vector<MultiPoly> forms;
    for (int i = 0; i < 5; ++i) {
        std::vector<AN> coeffs(c.begin() + 4 * i, c.begin() + 4 * i + 4);
        forms.push_back(MultiPoly::linear(std_sys.A.field(), coeffs).substituted(sys.projectivity));
    }
    SkewLinearMatrix M = SkewLinearMatrix::bordered(sys.T, forms);
    AN constant = pfaffian_constant(M, F); // exact construction: must be 1
    if (!(constant == AN(Rat(1))))
        fail(errc::internal, "frame construction produced a scaled Pfaffian");
    return FrameRep{std::move(M), std::move(constant), std::move(forms), std::move(sys)};
}

} // namespace pfrep
