// factor.cpp — see factor.hpp.
#include "pfrep/factor.hpp"

#include "pfrep/zpoly.hpp"

#include <algorithm>

namespace pfrep {

namespace {

bool factor_less(const UniPoly& a, const UniPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return an_less(a.coeff(i), b.coeff(i));
    return false;
}

FactorList factor_rational(const UniPoly& f) {
    QPolyV q;
    for (const AN& c : f.coeffs()) q.push_back(c.rat_value());
    ZFactorization zf = zq_factor(q);
    FactorList out{AN(zf.constant), {}};
    const FieldPtr& Q = NumberField::rationals();
    for (const auto& [zp, mult] : zf.factors) {
        QPolyV qc(zp.begin(), zp.end());
        UniPoly g = UniPoly::from_rational(Q, qc);
        AN lc = g.lead();
        out.constant *= lc.pow(static_cast<unsigned>(mult));
        out.factors.emplace_back(g.monic(), mult);
    }
    return out;
}

// Norm of s(x - k*alpha) with respect to the minimal polynomial of alpha,
// computed by specializing x and interpolating. s monic, squarefree; the
// result is monic of degree deg(s)*[K:Q].
QPolyV shifted_norm(const UniPoly& s, long k) {
    const FieldPtr& K = s.field();
    int d = K->degree(), n = s.deg();
    int N = n * d;
    int D = n + d - 1; // formal degree in t of s-hat(x0 - k t, t)
    const FieldPtr& Q = NumberField::rationals();
    UniPoly m = UniPoly::from_rational(Q, K->minpoly());

    std::vector<Rat> xs, ys;
    for (int idx = 0; idx <= N; ++idx) {
        long x0 = (idx % 2 == 1) ? (idx + 1) / 2 : -(idx / 2); // 0, 1, -1, 2, -2, ...
        // P(t) = sum_i c_i(t) (x0 - k t)^i via Horner
        UniPoly lin = UniPoly::from_rational(Q, {Rat(x0), Rat(-k)});
        UniPoly acc(Q);
        for (int i = n; i >= 0; --i) {
            std::vector<Rat> ci = s.coeff(i).coeffs();
            acc = acc * lin + UniPoly::from_rational(Q, ci);
        }
        xs.emplace_back(x0);
        ys.push_back(resultant(m, acc, d, D).rat_value());
    }
    // Newton interpolation on the N+1 samples
    std::vector<Rat> dd = ys; // divided differences, in place
    for (int j = 1; j <= N; ++j)
        for (int i = N; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    QPolyV poly{dd[N]};
    for (int i = N - 1; i >= 0; --i) {
        // poly = poly * (x - xs[i]) + dd[i]
        poly.insert(poly.begin(), Rat(0));
        for (size_t j = 0; j + 1 < poly.size(); ++j) poly[j] -= xs[i] * poly[j + 1];
        poly[0] += dd[i];
    }
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    return poly;
}

bool q_squarefree(const QPolyV& f) {
    Rat sc;
    ZPoly z = zq_primitive_part(f, &sc);
    ZPoly g = zp_gcd(z, zp_derivative(z));
    return zp_deg(g) == 0;
}

// Irreducible monic factors of a squarefree monic s over a proper extension.
std::vector<UniPoly> factor_extension_squarefree(const UniPoly& s) {
    const FieldPtr& K = s.field();
    if (s.deg() == 1) return {s};
    AN alpha = AN::generator(K);
    for (long t = 0; t <= 100; ++t) {
        long k = (t % 2 == 1) ? (t + 1) / 2 : -(t / 2); // 0, 1, -1, 2, -2, ...
        QPolyV norm = shifted_norm(s, k);
        if (!q_squarefree(norm)) continue;
        ZFactorization nf = zq_factor(norm);
        if (nf.factors.size() == 1 && nf.factors[0].second == 1) return {s};
        AN shift_amt = alpha * AN(Rat(-k));
        UniPoly sk = s.shift(shift_amt); // s(x - k alpha)
        std::vector<UniPoly> out;
        UniPoly check = UniPoly::constant(AN::one(K));
        for (const auto& [zp, mult] : nf.factors) {
            (void)mult; // norm squarefree => all multiplicities 1
            QPolyV qc(zp.begin(), zp.end());
            UniPoly ni = UniPoly::from_rational(K, qc);
            UniPoly g = UniPoly::gcd(sk, ni);
            if (g.deg() > 0) {
                UniPoly piece = g.shift(-shift_amt); // g(x + k alpha)
                check = check * piece;
                out.push_back(piece);
            }
        }
        if (check != s)
            fail(errc::internal, "norm factorization did not recover the polynomial");
        return out;
    }
    fail(errc::internal, "no squarefree shifted norm found");
}

} // namespace

FactorList factor(const UniPoly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "factorization of zero polynomial");
    const FieldPtr& K = f.field();
    long ext = K->degree();
    if (f.deg() * ext > kDegreeCap)
        fail(errc::degree_cap_exceeded,
             "factorization task of total degree " + std::to_string(f.deg() * ext) +
                 " exceeds cap " + std::to_string(kDegreeCap));
    if (K->is_rational()) {
        FactorList out = factor_rational(f);
        std::sort(out.factors.begin(), out.factors.end(),
                  [](const auto& a, const auto& b) { return factor_less(a.first, b.first); });
        return out;
    }
    FactorList out{f.lead(), {}};
    for (const auto& [sf, mult] : squarefree_decomposition(f))
        for (const UniPoly& g : factor_extension_squarefree(sf))
            out.factors.emplace_back(g, mult);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return factor_less(a.first, b.first); });
    return out;
}

bool is_irreducible(const UniPoly& f) {
    if (f.deg() < 1) return false;
    if (f.field()->is_rational()) {
        QPolyV q;
        for (const AN& c : f.coeffs()) q.push_back(c.rat_value());
        return zq_is_irreducible(q);
    }
    FactorList fl = factor(f);
    return fl.factors.size() == 1 && fl.factors[0].second == 1;
}

std::vector<std::pair<AN, int>> roots_in_field(const UniPoly& f) {
    std::vector<std::pair<AN, int>> roots;
    for (const auto& [g, mult] : factor(f).factors)
        if (g.deg() == 1) roots.emplace_back(-g.coeff(0), mult);
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return an_less(a.first, b.first); });
    return roots;
}

} // namespace pfrep
