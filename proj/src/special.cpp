#include "pfrep/special.hpp"

#include "pfrep/errors.hpp"
#include "pfrep/factor.hpp"
#include "pfrep/quadform.hpp"

#include <algorithm>
#include <utility>

namespace pfrep {

namespace {

MultiPoly embed_through(const std::vector<FieldExtension>& chain, const MultiPoly& p) {
    MultiPoly out = p;
    for (const FieldExtension& e : chain) out = embed_multipoly(e, out);
    return out;
}

std::vector<AN> ints_in(const FieldPtr& f, const std::vector<Int>& u) {
    std::vector<AN> out;
    out.reserve(u.size());
    for (const Int& v : u) out.push_back(AN::of(f, Rat(v)));
    return out;
}

// quadric monomials in canonical order (degree descending is trivial here,
// so this is lex descending on exponents)
std::vector<Expo> quadric_monomials() {
    std::vector<Expo> qm;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b)
            for (int c = 0; a + b + c <= 2; ++c) qm.push_back({a, b, c, 2 - a - b - c});
    std::sort(qm.begin(), qm.end(), TermOrder{});
    return qm;
}

} // namespace

Representation represent_irreducible(const MultiPoly& F, const std::optional<ProjPoint>& start,
                                     const RepresentOptions& opt) {
    MultiPoly surface = F;
    std::optional<ProjPoint> a1 = start;
    if (!a1) {
        FoundPoint fp = find_point(F);
        surface = fp.surface;
        a1 = fp.point;
    }
    CandidateQueue queue = opt.inject ? CandidateQueue(*opt.inject) : CandidateQueue();
    SearchLog local;
    SearchLog& log = opt.log_sink ? *opt.log_sink : local;
    std::vector<ProjPoint> pts = extend_to_frame(surface, *a1, opt.cap, queue, &log);
    FrameRep fr = represent_with_frame(surface, pts, opt.family);

    FieldPtr field = field_of(a1->coords());
    if (field->is_rational()) field = surface.field();
    return Representation{SurfaceKind::irreducible, field,    fr.M, fr.constant,
                          std::move(pts),           std::nullopt, log};
}

Representation represent_cone(const MultiPoly& F, const ProjPoint& vertex) {
    const FieldPtr& K = F.field();

    // projectivity sending e0 to the vertex
    Mat S(4, 4, K);
    bool built = false;
    for (int i = 0; i < 4 && !built; ++i) {
        for (int j = i + 1; j < 4 && !built; ++j) {
            for (int k = j + 1; k < 4 && !built; ++k) {
                for (int r = 0; r < 4; ++r) {
                    S.at(r, 0) = vertex.coords()[static_cast<size_t>(r)];
                    S.at(r, 1) = (r == i) ? AN::one(K) : AN::zero(K);
                    S.at(r, 2) = (r == j) ? AN::one(K) : AN::zero(K);
                    S.at(r, 3) = (r == k) ? AN::one(K) : AN::zero(K);
                }
                if (!S.det().is_zero()) built = true;
            }
        }
    }
    if (!built) fail(errc::internal, "vertex could not be completed to a projectivity");

    MultiPoly Fp = F.substituted(S);
    for (const auto& [e, c] : Fp.terms()) {
        (void)c;
        if (e[0] != 0) fail(errc::internal, "a cone must not involve the vertex coordinate");
    }
    Mat B0(4, 3, K);
    B0.at(1, 0) = AN::one(K);
    B0.at(2, 1) = AN::one(K);
    B0.at(3, 2) = AN::one(K);
    MultiPoly C = Fp.substituted(B0);

    std::vector<ProjPoint> base = plane_cubic_points(C);

    // lift the five base points along the ruling so the lifted frame is in
    // general position
    std::vector<ProjPoint> lifted;
    TupleEnumerator heights(5);
    for (int tries = 0; tries < 20000 && lifted.empty(); ++tries) {
        std::vector<Int> y = heights.next();
        std::vector<ProjPoint> cand;
        for (size_t i = 0; i < 5; ++i) {
            std::vector<AN> c{AN::of(K, Rat(y[i])), base[i].coords()[0], base[i].coords()[1],
                              base[i].coords()[2]};
            cand.emplace_back(field_of(c), c);
        }
        if (general_position(cand)) lifted = std::move(cand);
    }
    if (lifted.empty()) fail(errc::search_exhausted, "no ruling heights put the lifted frame in general position");

    FrameRep fr = represent_with_frame(Fp, lifted);
    SkewLinearMatrix M = fr.M.substituted(S.inverse());

    // report the frame in the original coordinates
    std::vector<ProjPoint> frame;
    for (const ProjPoint& a : lifted) {
        std::vector<AN> x(4, AN::zero(K));
        for (int r = 0; r < 4; ++r)
            for (int cidx = 0; cidx < 4; ++cidx)
                x[static_cast<size_t>(r)] += S.at(r, cidx) * a.coords()[static_cast<size_t>(cidx)];
        frame.emplace_back(field_of(x), x);
    }
    return Representation{SurfaceKind::cone, K, M, fr.constant, std::move(frame), vertex, SearchLog{}};
}

Representation represent_three_planes(const MultiPoly& F, const CubicFactors& cf) {
    const FieldPtr& L = cf.field;
    std::vector<MultiPoly> forms;
    for (const auto& [pl, m] : cf.planes)
        for (int k = 0; k < m; ++k) forms.push_back(pl);
    if (forms.size() != 3) fail(errc::internal, "three planes expected");

    SkewLinearMatrix M(6, L);
    M.set(0, 3, forms[0]);
    M.set(1, 4, forms[1]);
    M.set(2, 5, forms[2]);

    MultiPoly Femb = embed_through(cf.chain, F);
    AN c = pfaffian_constant(M, Femb);
    return Representation{SurfaceKind::three_planes, L, M, c, {}, std::nullopt, SearchLog{}};
}

Representation represent_plane_quadric(const MultiPoly& F, const CubicFactors& cf) {
    if (cf.planes.size() != 1 || !cf.quadric) fail(errc::internal, "plane-and-quadric factors expected");
    FieldPtr L = cf.field;
    MultiPoly plane = cf.planes[0].first;
    MultiPoly Q = *cf.quadric;
    std::vector<FieldExtension> chain = cf.chain;

    // a point on the quadric, from line sections (at worst one degree-2 step)
    std::optional<ProjPoint> q0;
    std::optional<UniPoly> memo;
    std::vector<AN> mv1, mv2;
    {
        TupleEnumerator seq(4);
        std::vector<std::vector<AN>> pts;
        auto pt_at = [&](size_t k) -> const std::vector<AN>& {
            while (pts.size() <= k) pts.push_back(ints_in(L, seq.next()));
            return pts[k];
        };
        int budget = 30;
        for (size_t j = 1; budget > 0 && !q0; ++j) {
            for (size_t i = 0; i < j && budget > 0 && !q0; ++i) {
                --budget;
                std::vector<AN> v1 = pt_at(i);
                std::vector<AN> v2 = pt_at(j);
                AN a = Q.eval(v1), c = Q.eval(v2);
                if (a.is_zero()) {
                    q0 = ProjPoint(L, v1);
                    break;
                }
                if (c.is_zero()) {
                    q0 = ProjPoint(L, v2);
                    break;
                }
                std::vector<AN> mid(4, AN::zero(L));
                for (size_t r = 0; r < 4; ++r) mid[r] = v1[r] + v2[r];
                AN b = Q.eval(mid) - a - c;
                UniPoly section(L, {a, b, c});
                auto roots = roots_in_field(section);
                if (!roots.empty()) {
                    std::vector<AN> pc(4, AN::zero(L));
                    for (size_t r = 0; r < 4; ++r) pc[r] = v1[r] + roots[0].first * v2[r];
                    q0 = ProjPoint(L, pc);
                    break;
                }
                if (!memo) {
                    memo = section.monic();
                    mv1 = v1;
                    mv2 = v2;
                }
            }
        }
        if (!q0) {
            if (!memo) fail(errc::internal, "quadric line sections cannot all degenerate");
            FieldExtension e2 = extend_field(*memo);
            chain.push_back(e2);
            L = e2.field;
            plane = embed_multipoly(e2, plane);
            Q = embed_multipoly(e2, Q);
            std::vector<AN> pc(4, AN::zero(L));
            for (size_t r = 0; r < 4; ++r)
                pc[r] = e2.embed(mv1[r]) + e2.root * e2.embed(mv2[r]);
            q0 = ProjPoint(L, pc);
        }
    }
    if (!Q.eval(q0->coords()).is_zero()) fail(errc::internal, "selected point is off the quadric");

    // projectivity sending e0 onto the quadric point
    Mat P(4, 4, L);
    bool built = false;
    for (int i = 0; i < 4 && !built; ++i) {
        for (int j = i + 1; j < 4 && !built; ++j) {
            for (int k = j + 1; k < 4 && !built; ++k) {
                for (int r = 0; r < 4; ++r) {
                    P.at(r, 0) = q0->coords()[static_cast<size_t>(r)];
                    P.at(r, 1) = (r == i) ? AN::one(L) : AN::zero(L);
                    P.at(r, 2) = (r == j) ? AN::one(L) : AN::zero(L);
                    P.at(r, 3) = (r == k) ? AN::one(L) : AN::zero(L);
                }
                if (!P.det().is_zero()) built = true;
            }
        }
    }
    if (!built) fail(errc::internal, "quadric point could not be completed to a projectivity");

    MultiPoly Qp = Q.substituted(P);
    if (!Qp.coeff({2, 0, 0, 0}).is_zero())
        fail(errc::internal, "moved quadric must vanish at the first basis point");

    // solve L0*x1 - L1*x2 + L2*x3 = -Qp for three linear forms
    std::vector<Expo> qm = quadric_monomials();
    Mat sys(static_cast<int>(qm.size()), 12, L);
    for (int t = 0; t < 3; ++t) {
        AN sgn = (t == 1) ? -AN::one(L) : AN::one(L);
        for (int v = 0; v < 4; ++v) {
            MultiPoly mono = MultiPoly::variable(L, v) * MultiPoly::variable(L, t + 1);
            for (size_t r = 0; r < qm.size(); ++r)
                sys.at(static_cast<int>(r), 4 * t + v) = sgn * mono.coeff(qm[r]);
        }
    }
    std::vector<AN> rhs;
    rhs.reserve(qm.size());
    for (const Expo& e : qm) rhs.push_back(-Qp.coeff(e));
    std::vector<AN> sol = sys.solve(rhs);

    std::vector<MultiPoly> forms;
    for (int t = 0; t < 3; ++t) {
        std::vector<AN> cs(sol.begin() + 4 * t, sol.begin() + 4 * t + 4);
        forms.push_back(MultiPoly::linear(L, cs));
    }
    SkewLinearMatrix Bp = SkewLinearMatrix::bordered(t_prime_matrix(L), forms);
    if (Bp.pfaffian() != Qp) fail(errc::internal, "bordered block must recover the moved quadric");
    SkewLinearMatrix B = Bp.substituted(P.inverse());

    SkewLinearMatrix M(6, L);
    M.set(0, 5, plane);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) M.set(i + 1, j + 1, B.at(i, j));

    MultiPoly Femb = embed_through(chain, F);
    AN c = pfaffian_constant(M, Femb);
    return Representation{SurfaceKind::plane_and_quadric, L, M, c, {}, std::nullopt, SearchLog{}};
}

Representation represent_any(const MultiPoly& F, const std::optional<ProjPoint>& start,
                             const RepresentOptions& opt) {
    Classification cl = classify(F);
    switch (cl.kind) {
        case SurfaceKind::irreducible: return represent_irreducible(F, start, opt);
        case SurfaceKind::cone: return represent_cone(F, *cl.cone_vertex);
        case SurfaceKind::three_planes: return represent_three_planes(F, cl.factors);
        case SurfaceKind::plane_and_quadric: return represent_plane_quadric(F, cl.factors);
    }
    fail(errc::internal, "unhandled surface kind");
}

void verify_representation(const SkewLinearMatrix& M, const MultiPoly& F, const AN& c) {
    AN actual = pfaffian_constant(M, F);
    AN want = c;
    AN::unify(actual, want);
    if (actual != want)
        fail(errc::verification_failed, "the Pfaffian does not match the claimed multiple of the form");
}

} // namespace pfrep
