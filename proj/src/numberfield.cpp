// numberfield.cpp — see numberfield.hpp.
#include "pfrep/numberfield.hpp"

#include "pfrep/zpoly.hpp"

#include <sstream>

namespace pfrep {

namespace {

// rational-coefficient poly division helpers used for the power table and
// inverses; vectors ascending, trimmed
void qtrim(std::vector<Rat>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::vector<Rat> qrem(std::vector<Rat> a, const std::vector<Rat>& m) {
    // m monic
    int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        Rat t = a.back();
        int sh = static_cast<int>(a.size()) - 1 - dm;
        for (int i = 0; i <= dm; ++i) a[sh + i] -= t * m[i];
        qtrim(a);
    }
    return a;
}

} // namespace

NumberField::NumberField(std::vector<Rat> m, std::optional<double> hint)
    : min_(std::move(m)), hint_(hint) {
    int d = degree();
    // powers t^d .. t^(2d-2) mod minpoly
    std::vector<Rat> cur(min_.begin(), min_.end() - 1);
    for (Rat& c : cur) c = -c; // t^d = -(m_0 + ... + m_{d-1} t^{d-1})
    cur.resize(d, Rat(0));
    for (int k = 0; k <= d - 2; ++k) {
        pow_.push_back(cur);
        // multiply by t, reduce
        std::vector<Rat> nxt(d, Rat(0));
        Rat top = cur.empty() ? Rat(0) : cur[d - 1];
        for (int i = d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
        nxt[0] = 0;
        if (top != 0)
            for (int i = 0; i < d; ++i) nxt[i] -= top * min_[i];
        cur = std::move(nxt);
    }
}

const FieldPtr& NumberField::rationals() {
    static const FieldPtr q = FieldPtr(new NumberField({Rat(0), Rat(1)}, std::nullopt));
    return q;
}

FieldPtr NumberField::make(std::vector<Rat> minpoly, bool assume_irreducible,
                           std::optional<double> hint) {
    qtrim(minpoly);
    int d = static_cast<int>(minpoly.size()) - 1;
    if (d < 1) fail(errc::zero_polynomial, "number field modulus must have degree >= 1");
    if (d > kDegreeCap)
        fail(errc::degree_cap_exceeded,
             "number field degree " + std::to_string(d) + " exceeds cap " +
                 std::to_string(kDegreeCap));
    if (minpoly.back() != 1) fail(errc::not_monic, "number field modulus must be monic");
    if (!assume_irreducible && d > 1) {
        QPolyV q(minpoly.begin(), minpoly.end());
        if (!zq_is_irreducible(q))
            fail(errc::reducible_modulus, "number field modulus is reducible over Q");
    }
    return FieldPtr(new NumberField(std::move(minpoly), hint));
}

AN::AN(const Rat& r) : f_(NumberField::rationals()), c_{r} {}

AN::AN(FieldPtr f, std::vector<Rat> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != f_->degree())
        fail(errc::wrong_size, "element coefficient vector does not match field degree");
}

AN AN::zero(const FieldPtr& f) { return AN(f, std::vector<Rat>(f->degree(), Rat(0))); }

AN AN::one(const FieldPtr& f) { return of(f, Rat(1)); }

AN AN::of(const FieldPtr& f, const Rat& r) {
    std::vector<Rat> c(f->degree(), Rat(0));
    c[0] = r;
    return AN(f, std::move(c));
}

AN AN::generator(const FieldPtr& f) {
    if (f->degree() == 1) return of(f, -f->minpoly()[0]);
    std::vector<Rat> c(f->degree(), Rat(0));
    c[1] = 1;
    return AN(f, std::move(c));
}

bool AN::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool AN::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat AN::rat_value() const {
    if (!is_rational()) fail(errc::field_mismatch, "element is not rational: " + str());
    return c_[0];
}

void AN::unify(AN& a, AN& b) {
    if (a.f_.get() == b.f_.get()) return;
    if (a.f_->same(*b.f_)) {
        b.f_ = a.f_;
        return;
    }
    if (a.f_->degree() == 1) {
        a = of(b.f_, a.c_[0]);
        return;
    }
    if (b.f_->degree() == 1) {
        b = of(a.f_, b.c_[0]);
        return;
    }
    fail(errc::field_mismatch, "elements live in incompatible number fields");
}

AN AN::operator-() const {
    AN r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

AN operator+(const AN& a0, const AN& b0) {
    AN a = a0, b = b0;
    AN::unify(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

AN operator-(const AN& a0, const AN& b0) {
    AN a = a0, b = b0;
    AN::unify(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
}

AN operator*(const AN& a0, const AN& b0) {
    AN a = a0, b = b0;
    AN::unify(a, b);
    int d = a.f_->degree();
    if (d == 1) return AN::of(a.f_, a.c_[0] * b.c_[0]);
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (int i = 0; i < d; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b.c_[j] == 0) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    const auto& tab = a.f_->power_table();
    std::vector<Rat> out(prod.begin(), prod.begin() + d);
    for (int k = 0; k <= d - 2; ++k) {
        const Rat& coef = prod[d + k];
        if (coef == 0) continue;
        for (int i = 0; i < d; ++i) out[i] += coef * tab[k][i];
    }
    return AN(a.f_, std::move(out));
}

AN AN::inverse() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
    int d = f_->degree();
    if (d == 1) return AN::of(f_, Rat(1) / c_[0]);
    // extended Euclid in Q[t]: u*c + v*m = 1
    std::vector<Rat> r0(f_->minpoly()), r1(c_);
    qtrim(r1);
    std::vector<Rat> s0{}, s1{Rat(1)}; // coefficients multiplying c
    while (true) {
        // r0 = q*r1 + r2
        std::vector<Rat> q, r2 = r0;
        int d1 = static_cast<int>(r1.size()) - 1;
        q.assign(std::max<int>(static_cast<int>(r2.size()) - d1, 1), Rat(0));
        while (static_cast<int>(r2.size()) - 1 >= d1) {
            Rat t = r2.back() / r1.back();
            int sh = static_cast<int>(r2.size()) - 1 - d1;
            q[sh] = t;
            for (int i = 0; i <= d1; ++i) r2[sh + i] -= t * r1[i];
            qtrim(r2);
        }
        // s2 = s0 - q*s1
        std::vector<Rat> qs(q.size() + s1.size(), Rat(0));
        if (!s1.empty())
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        std::vector<Rat> s2(std::max(s0.size(), qs.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        qtrim(s2);
        if (r2.empty()) {
            // r1 is the gcd: must be a nonzero constant (minpoly irreducible)
            if (static_cast<int>(r1.size()) != 1)
                fail(errc::internal, "non-trivial gcd with irreducible modulus");
            std::vector<Rat> inv = s1;
            for (Rat& x : inv) x /= r1[0];
            inv = qrem(std::move(inv), f_->minpoly());
            inv.resize(d, Rat(0));
            return AN(f_, std::move(inv));
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

AN operator/(const AN& a, const AN& b) { return a * b.inverse(); }

AN AN::pow(unsigned e) const {
    AN r = AN::one(f_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool operator==(const AN& a0, const AN& b0) {
    AN a = a0, b = b0;
    AN::unify(a, b);
    return a.c_ == b.c_;
}

bool an_less(const AN& a0, const AN& b0) {
    AN a = a0, b = b0;
    AN::unify(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
}

std::string AN::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat v = c_[i];
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        if (i == 0 || v != 1) {
            os << rat_str_short(v);
            if (i > 0) os << "*";
        }
        if (i == 1) os << "t";
        if (i > 1) os << "t^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace pfrep
