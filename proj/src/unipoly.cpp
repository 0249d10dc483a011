// unipoly.cpp — see unipoly.hpp.
#include "pfrep/unipoly.hpp"

#include "pfrep/linalg.hpp"

#include <sstream>

namespace pfrep {

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly::UniPoly(FieldPtr f, std::vector<AN> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (AN& a : c_) {
        if (a.field()->same(*f_)) continue;
        if (a.field()->is_rational())
            a = AN::of(f_, a.rat_value()); // rational constants embed anywhere
        else
            fail(errc::field_mismatch, "coefficient from a different number field");
    }
    trim();
}

UniPoly UniPoly::x(const FieldPtr& f) {
    return UniPoly(f, {AN::zero(f), AN::one(f)});
}

UniPoly UniPoly::constant(const AN& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::from_rational(const FieldPtr& f, const std::vector<Rat>& q) {
    std::vector<AN> c;
    c.reserve(q.size());
    for (const Rat& r : q) c.push_back(AN::of(f, r));
    return UniPoly(f, std::move(c));
}

AN UniPoly::coeff(int i) const {
    if (i < 0 || i > deg()) return AN::zero(f_);
    return c_[static_cast<size_t>(i)];
}

AN UniPoly::lead() const {
    if (is_zero()) fail(errc::zero_polynomial, "leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (AN& a : r.c_) a = -a;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r(a.f_);
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), AN::zero(a.f_));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r(a.f_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, AN::zero(a.f_));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

UniPoly UniPoly::scaled(const AN& c) const {
    UniPoly r = *this;
    for (AN& a : r.c_) a *= c;
    r.trim();
    return r;
}

UniPoly UniPoly::monic() const { return scaled(lead().inverse()); }

UniPoly UniPoly::derivative() const {
    UniPoly r(f_);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * AN::of(f_, Rat(static_cast<long>(i))));
    r.trim();
    return r;
}

AN UniPoly::eval(const AN& v) const {
    AN acc = AN::zero(f_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
}

UniPoly UniPoly::shift(const AN& c) const {
    // Horner form: f(x+c) = (...(a_n (x+c) + a_{n-1})(x+c) + ...) + a_0
    UniPoly lin(f_, {c, AN::one(f_)});
    UniPoly acc(f_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + constant(c_[i]);
    return acc;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    q = UniPoly(a.f_);
    r = a;
    int db = b.deg();
    AN linv = b.lead().inverse();
    q.c_.assign(std::max(a.deg() - db + 1, 0), AN::zero(a.f_));
    while (r.deg() >= db) {
        int sh = r.deg() - db;
        AN t = r.c_.back() * linv;
        q.c_[static_cast<size_t>(sh)] = t;
        for (int i = 0; i <= db; ++i)
            r.c_[static_cast<size_t>(sh + i)] -= t * b.c_[static_cast<size_t>(i)];
        r.trim();
    }
    q.trim();
}

UniPoly UniPoly::exact_div(const UniPoly& a, const UniPoly& b) {
    UniPoly q(a.f_), r(a.f_);
    divmod(a, b, q, r);
    if (!r.is_zero()) fail(errc::factor_mismatch, "inexact polynomial division");
    return q;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly q(a.f_), r(a.f_);
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

AN resultant(const UniPoly& a, const UniPoly& b, int fa, int fb) {
    if (a.is_zero() || b.is_zero()) fail(errc::zero_polynomial, "resultant of zero polynomial");
    int m = fa < 0 ? a.deg() : fa;
    int n = fb < 0 ? b.deg() : fb;
    if (m < a.deg() || n < b.deg())
        fail(errc::wrong_size, "formal degree below actual degree in resultant");
    const FieldPtr& f = a.field();
    if (m == 0 && n == 0) return AN::one(f);
    Mat s(m + n, m + n, f);
    for (int i = 0; i < n; ++i) // rows of a-coefficients
        for (int j = 0; j <= m; ++j) s.at(i, i + j) = a.coeff(m - j);
    for (int i = 0; i < m; ++i) // rows of b-coefficients
        for (int j = 0; j <= n; ++j) s.at(n + i, i + j) = b.coeff(n - j);
    return s.det();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
    std::vector<std::pair<UniPoly, int>> out;
    if (f.deg() < 1) return out;
    UniPoly w = f.monic();
    UniPoly g = UniPoly::gcd(w, w.derivative());
    if (g.deg() == 0) {
        out.emplace_back(w, 1);
        return out;
    }
    UniPoly y = UniPoly::exact_div(w.derivative(), g);
    w = UniPoly::exact_div(w, g);
    UniPoly z = y - w.derivative();
    int i = 1;
    while (w.deg() > 0) {
        UniPoly s = UniPoly::gcd(w, z);
        if (s.deg() > 0) out.emplace_back(s, i);
        w = UniPoly::exact_div(w, s);
        y = UniPoly::exact_div(z, s);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[i].str() << ")";
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

} // namespace pfrep
