// zpoly.cpp — integer polynomial arithmetic and rational factorization.
//
// Factorization is classic Zassenhaus: Yun squarefree decomposition over Z,
// Cantor-Zassenhaus factorization modulo a small good prime, quadratic Hensel
// lifting of the factor tree to a Landau-Mignotte height bound, then subset
// recombination with exact trial division. All randomness comes from a fixed
// LCG so results are deterministic; factor lists are sorted canonically.
#include "pfrep/zpoly.hpp"

#include "pfrep/errors.hpp"

#include <algorithm>
#include <cstdint>

namespace pfrep {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------- Z helpers
Int ipow(Int b, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

} // namespace

int zp_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

void zp_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    zp_trim(r);
    return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zp_trim(r);
    return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zp_trim(r);
    return r;
}

ZPoly zp_derivative(const ZPoly& f) {
    if (f.size() <= 1) return {};
    ZPoly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * static_cast<long>(i);
    zp_trim(r);
    return r;
}

Int zp_content(const ZPoly& f) {
    Int g = integer_content(f);
    if (!f.empty() && f.back() < 0) g = -g;
    return g;
}

ZPoly zp_primitive(const ZPoly& f) {
    if (f.empty()) return f;
    Int c = zp_content(f);
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[i] / c;
    return r;
}

bool zp_divides(const ZPoly& d, const ZPoly& f, ZPoly* quot) {
    if (d.empty()) return false;
    if (f.empty()) {
        if (quot) quot->clear();
        return true;
    }
    if (d.size() > f.size()) return false;
    ZPoly r = f;
    ZPoly q(f.size() - d.size() + 1, Int(0));
    const Int& lc = d.back();
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        Int& head = r[k + d.size() - 1];
        if (head == 0) continue;
        if (!mpz_divisible_p(head.get_mpz_t(), lc.get_mpz_t())) return false;
        Int t = head / lc;
        q[k] = t;
        for (size_t i = 0; i < d.size(); ++i) r[k + i] -= t * d[i];
    }
    for (const Int& c : r)
        if (c != 0) return false;
    if (quot) {
        zp_trim(q);
        *quot = q;
    }
    return true;
}

namespace {

// pseudo-remainder: lc(b)^(da-db+1) * a  mod  b
ZPoly zp_prem(ZPoly a, const ZPoly& b) {
    int da = zp_deg(a), db = zp_deg(b);
    if (db < 0) fail(errc::division_by_zero, "pseudo-remainder by zero");
    while (da >= db) {
        Int lb = b.back(), la = a.back();
        for (Int& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
        zp_trim(a);
        da = zp_deg(a);
    }
    return a;
}

} // namespace

ZPoly zp_gcd(const ZPoly& a0, const ZPoly& b0) {
    if (a0.empty()) return zp_primitive(b0);
    if (b0.empty()) return zp_primitive(a0);
    Int ca = zp_content(a0), cb = zp_content(b0);
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    ZPoly a = zp_primitive(a0), b = zp_primitive(b0);
    if (zp_deg(a) < zp_deg(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zp_prem(a, b);
        a = b;
        b = zp_primitive(r);
    }
    a = zp_primitive(a);
    for (Int& c : a) c *= cg;
    return a;
}

ZPoly zq_primitive_part(const QPolyV& f, Rat* scalar) {
    QPolyV t = f;
    while (!t.empty() && t.back() == 0) t.pop_back();
    if (t.empty()) {
        if (scalar) *scalar = 0;
        return {};
    }
    Int den = common_denominator(t);
    ZPoly z(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
        Rat c = t[i] * Rat(den);
        z[i] = c.get_num(); // den is 1 after scaling
    }
    Int cont = zp_content(z);
    for (Int& c : z) c /= cont;
    if (scalar) *scalar = Rat(cont) / Rat(den);
    return z;
}

// ------------------------------------------------------------ arithmetic mod p
namespace {

struct ModP {
    u64 p;
    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b % p) % p; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>(u128(a) * b % p); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a % p, p - 2); }
};

using PPoly = std::vector<u64>; // ascending degree, trimmed

void pp_trim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int pp_deg(const PPoly& f) { return static_cast<int>(f.size()) - 1; }

PPoly pp_from_z(const ZPoly& f, const ModP& m) {
    PPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        Int c = f[i] % static_cast<long>(m.p);
        if (c < 0) c += static_cast<long>(m.p);
        r[i] = c.get_ui();
    }
    pp_trim(r);
    return r;
}

PPoly pp_mul(const PPoly& a, const PPoly& b, const ModP& m) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + u128(a[i]) * b[j]) % m.p;
    }
    pp_trim(r);
    return r;
}

// remainder of a by b (b nonzero)
PPoly pp_rem(PPoly a, const PPoly& b, const ModP& m) {
    int db = pp_deg(b);
    u64 binv = m.inv(b.back());
    while (pp_deg(a) >= db) {
        u64 t = m.mul(a.back(), binv);
        int shift = pp_deg(a) - db;
        for (int i = 0; i <= db; ++i) a[shift + i] = m.sub(a[shift + i], m.mul(t, b[i]));
        pp_trim(a);
    }
    return a;
}

PPoly pp_gcd(PPoly a, PPoly b, const ModP& m) {
    while (!b.empty()) {
        PPoly r = pp_rem(a, b, m);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) { // monic normalization
        u64 iv = m.inv(a.back());
        for (u64& c : a) c = m.mul(c, iv);
    }
    return a;
}

PPoly pp_make_monic(PPoly f, const ModP& m) {
    if (f.empty()) return f;
    u64 iv = m.inv(f.back());
    for (u64& c : f) c = m.mul(c, iv);
    return f;
}

PPoly pp_derivative(const PPoly& f, const ModP& m) {
    if (f.size() <= 1) return {};
    PPoly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = m.mul(f[i], i % m.p);
    pp_trim(r);
    return r;
}

PPoly pp_powmod(PPoly base, const Int& e, const PPoly& mod, const ModP& m) {
    PPoly r{1};
    base = pp_rem(std::move(base), mod, m);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    // iterate bits from most significant
    for (size_t i = bits; i-- > 0;) {
        r = pp_mul(r, r, m);
        r = pp_rem(std::move(r), mod, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) {
            r = pp_mul(r, base, m);
            r = pp_rem(std::move(r), mod, m);
        }
    }
    return r;
}

struct Lcg {
    u64 s = 0x9e3779b97f4a7c15ULL;
    u64 next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 11;
    }
};

// equal-degree factorization: g is a product of irreducibles all of degree d
void edf(const PPoly& g, int d, const ModP& m, Lcg& rng, std::vector<PPoly>& out) {
    int n = pp_deg(g);
    if (n == d) {
        out.push_back(g);
        return;
    }
    Int exp = (ipow(Int(static_cast<long>(m.p)), static_cast<unsigned>(d)) - 1) / 2;
    for (;;) {
        PPoly a(n);
        for (int i = 0; i < n; ++i) a[i] = rng.next() % m.p;
        pp_trim(a);
        if (pp_deg(a) < 1) continue;
        PPoly b = pp_powmod(a, exp, g, m);
        if (b.empty())
            b = {m.p - 1};
        else
            b[0] = m.sub(b[0], 1);
        pp_trim(b);
        if (b.empty()) continue;
        PPoly h = pp_gcd(g, b, m);
        int dh = pp_deg(h);
        if (dh <= 0 || dh >= n) continue;
        edf(h, d, m, rng, out);
        PPoly rest = g, q;
        // exact division g / h
        {
            PPoly r = g;
            int dd = pp_deg(h);
            q.assign(r.size() - h.size() + 1, 0);
            u64 iv = m.inv(h.back());
            for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
                u64 t = m.mul(r[k + dd], iv);
                q[k] = t;
                if (!t) continue;
                for (int i = 0; i <= dd; ++i) r[k + i] = m.sub(r[k + i], m.mul(t, h[i]));
            }
            pp_trim(q);
            rest = q;
        }
        edf(rest, d, m, rng, out);
        return;
    }
}

// distinct-degree + equal-degree factorization of monic squarefree f mod p
std::vector<PPoly> pp_factor_squarefree(PPoly f, const ModP& m) {
    std::vector<PPoly> out;
    Lcg rng;
    PPoly h{0, 1}; // x
    int d = 0;
    PPoly v = std::move(f);
    while (pp_deg(v) >= 2 * (d + 1)) {
        ++d;
        h = pp_powmod(std::move(h), Int(static_cast<long>(m.p)), v, m);
        PPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = m.sub(hx[1], 1);
        pp_trim(hx);
        PPoly g = hx.empty() ? v : pp_gcd(v, hx, m);
        if (pp_deg(g) > 0) {
            edf(g, d, m, rng, out);
            // v /= g
            PPoly r = v;
            int dd = pp_deg(g);
            PPoly q(r.size() - g.size() + 1, 0);
            u64 iv = m.inv(g.back());
            for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
                u64 t = m.mul(r[k + dd], iv);
                q[k] = t;
                if (!t) continue;
                for (int i = 0; i <= dd; ++i) r[k + i] = m.sub(r[k + i], m.mul(t, g[i]));
            }
            pp_trim(q);
            v = q;
            h = pp_rem(std::move(h), v, m);
        }
        if (pp_deg(v) <= 0) break;
    }
    if (pp_deg(v) > 0) out.push_back(pp_make_monic(std::move(v), m));
    return out;
}

// --------------------------------------------------- arithmetic mod M (= p^k)
Int mod_sym(const Int& a, const Int& M) {
    Int r = a % M;
    if (r < 0) r += M;
    if (2 * r > M) r -= M;
    return r;
}

ZPoly zm_reduce(ZPoly f, const Int& M) {
    for (Int& c : f) {
        c %= M;
        if (c < 0) c += M;
    }
    zp_trim(f);
    return f;
}

ZPoly zm_mul(const ZPoly& a, const ZPoly& b, const Int& M) { return zm_reduce(zp_mul(a, b), M); }

ZPoly zm_add(const ZPoly& a, const ZPoly& b, const Int& M) { return zm_reduce(zp_add(a, b), M); }

ZPoly zm_sub(const ZPoly& a, const ZPoly& b, const Int& M) { return zm_reduce(zp_sub(a, b), M); }

// division by monic h
void zm_divmod_monic(const ZPoly& a, const ZPoly& h, const Int& M, ZPoly& q, ZPoly& r) {
    r = a;
    int dh = zp_deg(h);
    if (zp_deg(r) < dh) {
        q.clear();
        return;
    }
    q.assign(r.size() - h.size() + 1, Int(0));
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        Int t = r[k + dh] % M;
        if (t < 0) t += M;
        q[k] = t;
        if (t == 0) continue;
        for (int i = 0; i <= dh; ++i) {
            r[k + i] -= t * h[i];
        }
    }
    q = zm_reduce(std::move(q), M);
    r = zm_reduce(std::move(r), M);
}

// one quadratic Hensel step: f = g*h (mod M), s*g + t*h = 1 (mod M)
// -> same invariants mod M^2 (g keeps lc(f) folded in, h monic).
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& M) {
    Int M2 = M * M;
    ZPoly e = zm_sub(f, zp_mul(g, h), M2);
    ZPoly q, r;
    zm_divmod_monic(zm_mul(s, e, M2), h, M2, q, r);
    g = zm_add(g, zm_add(zm_mul(t, e, M2), zm_mul(q, g, M2), M2), M2);
    h = zm_add(h, r, M2);
    ZPoly b = zm_sub(zm_add(zm_mul(s, g, M2), zm_mul(t, h, M2), M2), ZPoly{1}, M2);
    ZPoly c, d;
    zm_divmod_monic(zm_mul(s, b, M2), h, M2, c, d);
    s = zm_sub(s, d, M2);
    t = zm_sub(zm_sub(t, zm_mul(t, b, M2), M2), zm_mul(c, g, M2), M2);
}

// extended Euclid mod p for PPoly: s*a + t*b = 1 (a, b coprime mod p)
void pp_bezout(const PPoly& a, const PPoly& b, const ModP& m, PPoly& s, PPoly& t) {
    PPoly r0 = a, r1 = b;
    PPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // q = r0 / r1
        PPoly q(std::max<int>(pp_deg(r0) - pp_deg(r1) + 1, 0), 0);
        PPoly rr = r0;
        u64 iv = m.inv(r1.back());
        int d1 = pp_deg(r1);
        while (pp_deg(rr) >= d1) {
            u64 c = m.mul(rr.back(), iv);
            int sh = pp_deg(rr) - d1;
            q[sh] = c;
            for (int i = 0; i <= d1; ++i) rr[sh + i] = m.sub(rr[sh + i], m.mul(c, r1[i]));
            pp_trim(rr);
        }
        pp_trim(q);
        r0 = std::move(r1);
        r1 = std::move(rr);
        PPoly ns = s0, nt = t0;
        ns = [&] {
            PPoly qq = pp_mul(q, s1, m);
            PPoly res(std::max(s0.size(), qq.size()), 0);
            for (size_t i = 0; i < s0.size(); ++i) res[i] = s0[i];
            for (size_t i = 0; i < qq.size(); ++i) res[i] = m.sub(res[i], qq[i]);
            pp_trim(res);
            return res;
        }();
        nt = [&] {
            PPoly qq = pp_mul(q, t1, m);
            PPoly res(std::max(t0.size(), qq.size()), 0);
            for (size_t i = 0; i < t0.size(); ++i) res[i] = t0[i];
            for (size_t i = 0; i < qq.size(); ++i) res[i] = m.sub(res[i], qq[i]);
            pp_trim(res);
            return res;
        }();
        s0 = std::move(s1);
        s1 = std::move(ns);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    // r0 = gcd (a unit); normalize to 1
    u64 iv = m.inv(r0[0]);
    for (u64& c : s0) c = m.mul(c, iv);
    for (u64& c : t0) c = m.mul(c, iv);
    s = s0;
    t = t0;
}

ZPoly zm_from_pp(const PPoly& f) {
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = Int(static_cast<unsigned long>(f[i]));
    zp_trim(r);
    return r;
}

// Lift the mod-p factorization fm = prod(parts) to mod P (fm and all parts
// monic; precision is doubled as needed). Keeping everything monic makes the
// leading terms of fm and g*h cancel exactly, which bounds the degrees of the
// Hensel updates. Returns monic factors mod P.
std::vector<ZPoly> hensel_lift_list(const ZPoly& fm, std::vector<PPoly> parts, const ModP& m,
                                    const Int& P) {
    if (parts.size() == 1) return {fm};
    size_t half = parts.size() / 2;
    std::vector<PPoly> left(parts.begin(), parts.begin() + half);
    std::vector<PPoly> right(parts.begin() + half, parts.end());
    PPoly A{1}, B{1};
    for (const PPoly& g : left) A = pp_mul(A, g, m);
    for (const PPoly& g : right) B = pp_mul(B, g, m);
    PPoly s0, t0;
    pp_bezout(A, B, m, s0, t0);
    ZPoly g = zm_from_pp(A), h = zm_from_pp(B), s = zm_from_pp(s0), t = zm_from_pp(t0);
    Int M(static_cast<long>(m.p));
    while (M < P) {
        hensel_step(zm_reduce(fm, M * M), g, h, s, t, M);
        M *= M;
    }
    g = zm_reduce(std::move(g), P);
    h = zm_reduce(std::move(h), P);
    std::vector<ZPoly> out = hensel_lift_list(g, std::move(left), m, P);
    std::vector<ZPoly> rhs = hensel_lift_list(h, std::move(right), m, P);
    out.insert(out.end(), rhs.begin(), rhs.end());
    return out;
}

// factor a primitive squarefree integer polynomial, deg >= 1
std::vector<ZPoly> z_factor_squarefree(const ZPoly& f) {
    int n = zp_deg(f);
    if (n == 1) return {f};
    // choose a good small prime
    ModP m{0};
    std::vector<PPoly> parts;
    for (u64 p = 3;; p = [&] {
             mpz_class np(static_cast<unsigned long>(p));
             mpz_nextprime(np.get_mpz_t(), np.get_mpz_t());
             return np.get_ui();
         }()) {
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        ModP mm{p};
        PPoly fp = pp_from_z(f, mm);
        if (pp_deg(fp) != n) continue;
        PPoly fd = pp_derivative(fp, mm);
        if (fd.empty()) continue;
        PPoly g = pp_gcd(fp, fd, mm);
        if (pp_deg(g) != 0) continue;
        m = mm;
        parts = pp_factor_squarefree(pp_make_monic(std::move(fp), mm), mm);
        break;
    }
    if (parts.size() == 1) return {f}; // irreducible mod p => irreducible over Z
    std::sort(parts.begin(), parts.end());
    // Landau-Mignotte style height bound for factors scaled by lc(f)
    Int maxc = 0;
    for (const Int& c : f) {
        Int a = abs(c);
        if (a > maxc) maxc = a;
    }
    Int bound = Int(n + 1) * ipow(Int(2), static_cast<unsigned>(n)) * maxc * abs(f.back());
    Int P(static_cast<long>(m.p));
    while (P <= 2 * bound) P *= P;
    // lift the factorization of the monic version of f; lc(f) is reintroduced
    // per recombination candidate
    ZPoly fmonic;
    {
        Int lcinv;
        if (mpz_invert(lcinv.get_mpz_t(), f.back().get_mpz_t(), P.get_mpz_t()) == 0)
            fail(errc::internal, "leading coefficient not invertible mod p^k");
        fmonic = f;
        for (Int& c : fmonic) c = ((c % P) * lcinv) % P;
        fmonic = zm_reduce(std::move(fmonic), P);
    }
    std::vector<ZPoly> lifted = hensel_lift_list(fmonic, parts, m, P);

    // subset recombination
    std::vector<ZPoly> out;
    ZPoly rest = f;
    std::vector<int> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i);
    size_t card = 1;
    while (2 * card <= live.size()) {
        bool found = false;
        // enumerate subsets of size `card` over live indices in lexicographic order
        std::vector<size_t> idx(card);
        for (size_t i = 0; i < card; ++i) idx[i] = i;
        for (;;) {
            ZPoly cand{rest.back()};
            for (size_t i : idx) cand = zm_reduce(zp_mul(cand, lifted[live[i]]), P);
            for (Int& c : cand) c = mod_sym(c, P);
            zp_trim(cand);
            cand = zp_primitive(cand);
            ZPoly q;
            if (!cand.empty() && zp_deg(cand) >= 1 && zp_divides(cand, rest, &q)) {
                out.push_back(cand);
                rest = q;
                std::vector<int> nl;
                for (size_t i = 0, k = 0; i < live.size(); ++i) {
                    if (k < idx.size() && idx[k] == i) {
                        ++k;
                        continue;
                    }
                    nl.push_back(live[i]);
                }
                live = std::move(nl);
                found = true;
                break;
            }
            // next subset
            int pos = static_cast<int>(card) - 1;
            while (pos >= 0 && idx[pos] == live.size() - card + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t i = pos + 1; i < card; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++card;
        if (live.empty()) break;
    }
    if (zp_deg(rest) >= 1) out.push_back(zp_primitive(rest));
    return out;
}

} // namespace

ZFactorization zq_factor(const QPolyV& f) {
    ZFactorization res;
    ZPoly F = zq_primitive_part(f, &res.constant);
    if (F.empty()) fail(errc::zero_polynomial, "factor of zero polynomial");
    if (zp_deg(F) == 0) return res; // constant: no factors
    // Yun squarefree decomposition over Z
    std::vector<std::pair<ZPoly, int>> sqf;
    {
        ZPoly fp = zp_derivative(F);
        ZPoly a = zp_gcd(F, fp);
        ZPoly b, c;
        zp_divides(a, F, &b);
        zp_divides(a, fp, &c);
        ZPoly d = zp_sub(c, zp_derivative(b));
        int i = 1;
        while (zp_deg(b) > 0) {
            ZPoly pcur = zp_gcd(b, d);
            if (zp_deg(pcur) > 0) sqf.emplace_back(pcur, i);
            ZPoly nb, nc;
            zp_divides(pcur, b, &nb);
            zp_divides(pcur, d, &nc);
            b = nb;
            d = zp_sub(nc, zp_derivative(b));
            ++i;
        }
    }
    for (auto& [part, mult] : sqf) {
        for (ZPoly& irr : z_factor_squarefree(part)) {
            if (irr.back() < 0)
                for (Int& cc : irr) cc = -cc;
            res.factors.emplace_back(std::move(irr), mult);
        }
    }
    std::sort(res.factors.begin(), res.factors.end(), [](const auto& x, const auto& y) {
        if (zp_deg(x.first) != zp_deg(y.first)) return zp_deg(x.first) < zp_deg(y.first);
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
    });
    return res;
}

bool zq_is_irreducible(const QPolyV& f) {
    QPolyV t = f;
    while (!t.empty() && t.back() == 0) t.pop_back();
    if (static_cast<int>(t.size()) - 1 < 1) return false;
    ZFactorization z = zq_factor(f);
    return z.factors.size() == 1 && z.factors[0].second == 1 &&
           zp_deg(z.factors[0].first) == static_cast<int>(t.size()) - 1;
}

} // namespace pfrep
