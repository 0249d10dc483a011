#include "pfrep/classify.hpp"

#include "pfrep/errors.hpp"
#include "pfrep/extension.hpp"
#include "pfrep/factor.hpp"
#include "pfrep/points.hpp"
#include "pfrep/quadform.hpp"
#include "pfrep/unipoly.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace pfrep {

namespace {

void validate_cubic(const MultiPoly& F) {
    if (F.is_zero()) fail(errc::zero_form, "the zero form does not define a surface");
    if (!F.is_homogeneous(3)) {
        if (F.deg() == 3) fail(errc::not_homogeneous, "the form must be homogeneous");
        fail(errc::not_cubic, "the form must be a cubic");
    }
}

// scale a linear form so its first nonzero coefficient is 1
MultiPoly normalize_linear(const MultiPoly& l, AN& carry) {
    for (const AN& v : linear_coeffs(l)) {
        if (v.is_zero()) continue;
        carry *= v;
        return l.scaled(v.inverse());
    }
    fail(errc::zero_form, "cannot normalize the zero linear form");
}

MultiPoly normalize_lead(const MultiPoly& p, AN& carry) {
    AN lead = p.terms().begin()->second;
    carry *= lead;
    return p.scaled(lead.inverse());
}

void push_plane(std::vector<std::pair<MultiPoly, int>>& planes, const MultiPoly& l) {
    for (auto& [pl, m] : planes) {
        if (pl == l) {
            ++m;
            return;
        }
    }
    planes.emplace_back(l, 1);
}

void verify_product(const MultiPoly& F, const CubicFactors& cf) {
    MultiPoly prod = MultiPoly::constant(cf.constant);
    for (const auto& [pl, m] : cf.planes)
        for (int k = 0; k < m; ++k) prod = prod * pl;
    if (cf.quadric) prod = prod * *cf.quadric;
    MultiPoly emb = F;
    for (const FieldExtension& e : cf.chain) emb = embed_multipoly(e, emb);
    if (prod != emb) fail(errc::internal, "factor product does not reproduce the form");
}

// A repeated linear factor of a cubic is always rational over the coefficient
// field (its Galois conjugates would be repeated factors too, overflowing the
// degree), and it divides every partial derivative. So candidates are the
// same-field linear factors of the first nonzero partial, each confirmed by
// dividing the cubic twice.
std::optional<CubicFactors> repeated_factor_split(const MultiPoly& F) {
    MultiPoly Q(F.field());
    for (int i = 0; i < 4; ++i) {
        Q = F.derivative(i);
        if (!Q.is_zero()) break;
    }
    if (Q.is_zero()) fail(errc::internal, "a nonzero cubic has a nonzero partial derivative");
    if (quadric_rank(Q) > 2) return std::nullopt;
    auto qf = split_low_rank_quadric(Q, /*allow_extension=*/false);
    if (!qf) return std::nullopt;
    for (const MultiPoly* cand : {&qf->l1, &qf->l2}) {
        std::vector<AN> l = linear_coeffs(*cand);
        auto [q1, r1] = divmod_linear(F, l);
        if (!r1.is_zero()) continue;
        auto [q2, r2] = divmod_linear(q1, l);
        if (!r2.is_zero()) continue;
        if (!q2.is_homogeneous(1)) fail(errc::internal, "cofactor of a squared linear factor must be linear");
        CubicFactors out;
        out.field = F.field();
        out.constant = AN::one(F.field());
        MultiPoly ln = normalize_linear(*cand, out.constant);
        out.constant *= out.constant; // the squared factor carries its scale twice
        MultiPoly mn = normalize_linear(q2, out.constant);
        out.planes.emplace_back(ln, 2);
        push_plane(out.planes, mn);
        verify_product(F, out);
        return out;
    }
    return std::nullopt;
}

// candidate linear factor of FL in pivot coordinates, reconstructed from a
// simple root u0 of the pivot-line section: the coefficients of x2 and x3
// fall out of the partial derivatives of FL at (u0, 1, 0, 0)
std::optional<std::pair<std::vector<AN>, MultiPoly>> try_root(const MultiPoly& FL, const AN& u0) {
    const FieldPtr& L = FL.field();
    std::vector<AN> pt{u0, AN::one(L), AN::zero(L), AN::zero(L)};
    AN gu = FL.derivative(0).eval(pt);
    if (gu.is_zero()) return std::nullopt;
    std::vector<AN> ell{AN::one(L), -u0, FL.derivative(2).eval(pt) / gu,
                        FL.derivative(3).eval(pt) / gu};
    auto [quot, rem] = divmod_linear(FL, ell);
    if (!rem.is_zero()) return std::nullopt;
    return std::make_pair(ell, quot);
}

CubicFactors assemble(const MultiPoly& F, const Mat& A, const std::optional<FieldExtension>& ext1,
                      const std::vector<AN>& ellA, const MultiPoly& QA) {
    const FieldPtr& L = QA.field();
    Mat Ainv = A.inverse();
    Mat AinvL(4, 4, L);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            AinvL.at(i, j) = ext1 ? ext1->embed(Ainv.at(i, j)) : Ainv.at(i, j);
    MultiPoly ell = MultiPoly::linear(L, ellA).substituted(AinvL);
    MultiPoly Q = QA.substituted(AinvL);

    std::vector<FieldExtension> chain;
    if (ext1) chain.push_back(*ext1);

    CubicFactors out;
    AN carry = AN::one(L);
    MultiPoly eln = normalize_linear(ell, carry);
    if (quadric_rank(Q) >= 3) {
        MultiPoly Qn = normalize_lead(Q, carry);
        out.field = L;
        out.constant = carry;
        out.planes.emplace_back(eln, 1);
        out.quadric = Qn;
    } else {
        auto qf = split_low_rank_quadric(Q, /*allow_extension=*/true);
        if (!qf) fail(errc::internal, "a low-rank quadric must split once extensions are allowed");
        if (qf->extended) {
            chain.push_back(qf->ext);
            carry = qf->ext.embed(carry);
            eln = embed_multipoly(qf->ext, eln);
        }
        carry *= qf->scale;
        MultiPoly n1 = normalize_linear(qf->l1, carry);
        MultiPoly n2 = normalize_linear(qf->l2, carry);
        out.field = qf->field;
        out.constant = carry;
        out.planes.emplace_back(eln, 1);
        push_plane(out.planes, n1);
        push_plane(out.planes, n2);
    }
    out.chain = chain;
    std::stable_sort(out.planes.begin(), out.planes.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    verify_product(F, out);
    return out;
}

} // namespace

CubicFactors linear_factors(const MultiPoly& F) {
    validate_cubic(F);
    const FieldPtr& K = F.field();

    if (auto rep = repeated_factor_split(F)) return *rep;

    // F is squarefree. Pick a pivot line through p (off the surface) and q
    // whose section F(q + u*p) is a squarefree cubic in u.
    std::vector<AN> p, q;
    UniPoly f1(K);
    bool have = false;
    TupleEnumerator pe(4);
    for (int pi = 0; pi < 40 && !have; ++pi) {
        std::vector<Int> pu = pe.next();
        std::vector<AN> pv;
        pv.reserve(4);
        for (const Int& v : pu) pv.push_back(AN::of(K, Rat(v)));
        if (F.eval(pv).is_zero()) continue;
        TupleEnumerator qe(4);
        for (int qi = 0; qi < 40 && !have; ++qi) {
            std::vector<Int> qu = qe.next();
            std::vector<AN> qv;
            qv.reserve(4);
            for (const Int& v : qu) qv.push_back(AN::of(K, Rat(v)));
            std::array<AN, 4> e = line_expansion(F, qv, pv);
            UniPoly cand(K, {e[0], e[1], e[2], e[3]});
            if (cand.deg() != 3) continue;
            if (UniPoly::gcd(cand, cand.derivative()).deg() != 0) continue;
            f1 = cand;
            p = pv;
            q = qv;
            have = true;
        }
    }
    if (!have) fail(errc::internal, "no squarefree pivot line found for a squarefree cubic");

    // complete (p, q) to a projectivity with two standard basis vectors
    Mat A(4, 4, K);
    bool built = false;
    for (int i = 0; i < 4 && !built; ++i) {
        for (int j = i + 1; j < 4 && !built; ++j) {
            for (int r = 0; r < 4; ++r) {
                A.at(r, 0) = p[static_cast<size_t>(r)];
                A.at(r, 1) = q[static_cast<size_t>(r)];
                A.at(r, 2) = (r == i) ? AN::one(K) : AN::zero(K);
                A.at(r, 3) = (r == j) ? AN::one(K) : AN::zero(K);
            }
            if (!A.det().is_zero()) built = true;
        }
    }
    if (!built) fail(errc::internal, "pivot line basis could not be completed");
    MultiPoly FA = F.substituted(A);

    for (const auto& [root, mult] : roots_in_field(f1)) {
        (void)mult;
        if (auto hit = try_root(FA, root)) return assemble(F, A, std::nullopt, hit->first, hit->second);
    }

    // No factor over the input field. A linear factor over a quadratic
    // extension would force a rational cofactor (its conjugate divides too),
    // which we would have found; so only an irreducible cubic section can
    // still hide one.
    if (is_irreducible(f1)) {
        FieldExtension ext = extend_field(f1.monic());
        MultiPoly FL = embed_multipoly(ext, FA);
        if (auto hit = try_root(FL, ext.root)) return assemble(F, A, ext, hit->first, hit->second);
    }

    return CubicFactors{K, AN::one(K), {}, std::nullopt, {}};
}

std::optional<ProjPoint> cone_vertex(const MultiPoly& F) {
    validate_cubic(F);
    const FieldPtr& K = F.field();
    std::vector<Expo> qm;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b)
            for (int c = 0; a + b + c <= 2; ++c) qm.push_back({a, b, c, 2 - a - b - c});
    std::sort(qm.begin(), qm.end(), TermOrder{});

    Mat C(static_cast<int>(qm.size()), 4, K);
    for (int i = 0; i < 4; ++i) {
        MultiPoly d = F.derivative(i);
        for (size_t r = 0; r < qm.size(); ++r) C.at(static_cast<int>(r), i) = d.coeff(qm[r]);
    }
    Mat ker = C.kernel();
    if (ker.cols() == 0) return std::nullopt;
    std::vector<AN> v(4, AN::zero(K));
    for (int r = 0; r < 4; ++r) v[static_cast<size_t>(r)] = ker.at(r, 0);
    return ProjPoint(K, v);
}

const char* surface_kind_name(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::irreducible: return "irreducible";
        case SurfaceKind::cone: return "cone";
        case SurfaceKind::plane_and_quadric: return "plane-and-quadric";
        case SurfaceKind::three_planes: return "three-planes";
    }
    return "unknown";
}

Classification classify(const MultiPoly& F) {
    validate_cubic(F);
    CubicFactors cf = linear_factors(F);
    Classification out{SurfaceKind::irreducible, cf, std::nullopt};
    if (!cf.planes.empty()) {
        out.kind = cf.quadric ? SurfaceKind::plane_and_quadric : SurfaceKind::three_planes;
        return out;
    }
    if (auto v = cone_vertex(F)) {
        out.kind = SurfaceKind::cone;
        out.cone_vertex = v;
    }
    return out;
}

} // namespace pfrep
