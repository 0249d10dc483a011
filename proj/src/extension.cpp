// extension.cpp — see extension.hpp.
#include "pfrep/extension.hpp"

#include "pfrep/linalg.hpp"
#include "pfrep/zpoly.hpp"

namespace pfrep {

AN FieldExtension::embed(const AN& a) const {
    if (a.field()->is_rational()) return AN::of(field, a.rat_value());
    if (!a.field()->same(*base))
        fail(errc::field_mismatch, "element does not belong to the extension's base field");
    AN acc = AN::zero(field);
    const std::vector<Rat>& c = a.coeffs();
    for (size_t i = c.size(); i-- > 0;) acc = acc * alpha_image + AN::of(field, c[i]);
    return acc;
}

UniPoly FieldExtension::embed_poly(const UniPoly& p) const {
    std::vector<AN> c;
    c.reserve(p.coeffs().size());
    for (const AN& a : p.coeffs()) c.push_back(embed(a));
    return UniPoly(field, std::move(c));
}

namespace {

// flatten an element of K[u]/(p) — a UniPoly over K of degree < d2 — into the
// rational coordinate vector over the basis alpha^i u^j (i < d1, j < d2)
std::vector<Rat> flatten(const UniPoly& e, int d1, int d2) {
    std::vector<Rat> v(static_cast<size_t>(d1) * d2, Rat(0));
    for (int j = 0; j <= e.deg(); ++j) {
        AN cj = e.coeff(j);
        const std::vector<Rat>& c = cj.coeffs();
        for (size_t i = 0; i < c.size(); ++i) v[static_cast<size_t>(j) * d1 + i] = c[i];
    }
    return v;
}

} // namespace

FieldExtension extend_field(const UniPoly& p) {
    if (p.deg() < 1) fail(errc::zero_polynomial, "cannot adjoin a root of a constant");
    const FieldPtr& K = p.field();
    int d1 = K->degree(), d2 = p.deg();
    if (d2 == 1) {
        AN root = -p.coeff(0) / p.coeff(1);
        return FieldExtension{K, K, AN::generator(K), root};
    }
    int D = d1 * d2;
    if (D > kDegreeCap)
        fail(errc::degree_cap_exceeded,
             "extension of absolute degree " + std::to_string(D) + " exceeds cap " +
                 std::to_string(kDegreeCap));

    UniPoly pm = p.monic();
    const FieldPtr& Q = NumberField::rationals();
    AN alpha = AN::generator(K);
    for (long k = 1; k <= 200; ++k) {
        // gamma = u + k*alpha as an element of K[u]/(pm)
        UniPoly gamma(K, {alpha * AN(Rat(k)), AN::one(K)});
        // Krylov vectors gamma^0 .. gamma^D
        std::vector<std::vector<Rat>> pows;
        UniPoly cur = UniPoly::constant(AN::one(K));
        for (int e = 0; e <= D; ++e) {
            pows.push_back(flatten(cur, d1, d2));
            if (e == D) break;
            UniPoly q(K), r(K);
            UniPoly::divmod(cur * gamma, pm, q, r);
            cur = r;
        }
        Mat M(D, D, Q); // columns gamma^0 .. gamma^{D-1}
        for (int c = 0; c < D; ++c)
            for (int r = 0; r < D; ++r) M.at(r, c) = AN(pows[static_cast<size_t>(c)][static_cast<size_t>(r)]);
        if (M.rank() < D) continue; // gamma not primitive; try the next k
        Mat Minv = M.inverse();

        auto apply = [&](const std::vector<Rat>& v) {
            std::vector<Rat> out(static_cast<size_t>(D));
            for (int r = 0; r < D; ++r) {
                AN acc = AN::zero(Q);
                for (int c = 0; c < D; ++c)
                    acc += Minv.at(r, c) * AN(v[static_cast<size_t>(c)]);
                out[static_cast<size_t>(r)] = acc.rat_value();
            }
            return out;
        };

        std::vector<Rat> mc = apply(pows[static_cast<size_t>(D)]); // gamma^D in the gamma-power basis
        QPolyV minpoly(static_cast<size_t>(D) + 1);
        for (int i = 0; i < D; ++i) minpoly[static_cast<size_t>(i)] = -mc[static_cast<size_t>(i)];
        minpoly[static_cast<size_t>(D)] = 1;
        if (!zq_is_irreducible(minpoly))
            fail(errc::reducible_modulus,
                 "defining polynomial is not irreducible over the base field");
        FieldPtr L = NumberField::make(minpoly, /*assume_irreducible=*/true);

        std::vector<Rat> av = apply(flatten(UniPoly::constant(alpha), d1, d2));
        AN alpha_image(L, std::move(av));
        AN root = AN::generator(L) - AN(Rat(k)) * alpha_image;

        FieldExtension ext{K, L, alpha_image, root};
        // sanity: the claimed root really is one
        if (!ext.embed_poly(pm).eval(root).is_zero())
            fail(errc::internal, "flattened extension produced a non-root");
        return ext;
    }
    // every candidate primitive element had too small a degree: the modulus
    // cannot have been irreducible (e.g. it had a repeated factor)
    fail(errc::reducible_modulus, "no primitive element found; modulus is not irreducible");
}

} // namespace pfrep
