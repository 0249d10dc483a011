// multipoly.cpp — see multipoly.hpp.
#include "pfrep/multipoly.hpp"

#include <cctype>
#include <sstream>

namespace pfrep {

FieldPtr field_of(const std::vector<AN>& v) {
    FieldPtr f = NumberField::rationals();
    for (const AN& a : v) {
        if (a.field()->is_rational()) continue;
        if (!f->is_rational() && !f->same(*a.field()))
            fail(errc::field_mismatch, "elements from two different extensions");
        f = a.field();
    }
    return f;
}

MultiPoly MultiPoly::constant(const AN& c) {
    MultiPoly p(c.field());
    p.add_term({0, 0, 0, 0}, c);
    return p;
}

MultiPoly MultiPoly::variable(const FieldPtr& f, int i) {
    if (i < 0 || i > 3) fail(errc::wrong_size, "variable index out of range");
    MultiPoly p(f);
    Expo e{0, 0, 0, 0};
    e[static_cast<size_t>(i)] = 1;
    p.add_term(e, AN::one(f));
    return p;
}

MultiPoly MultiPoly::linear(const FieldPtr& f, const std::vector<AN>& coeffs) {
    if (coeffs.size() > 4) fail(errc::wrong_size, "too many linear coefficients");
    MultiPoly p(f);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Expo e{0, 0, 0, 0};
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

int MultiPoly::deg() const {
    if (t_.empty()) return -1;
    return expo_deg(t_.begin()->first); // canonical order puts top degree first
}

bool MultiPoly::is_homogeneous(int d) const {
    for (const auto& [e, c] : t_)
        if (expo_deg(e) != d) return false;
    return true;
}

AN MultiPoly::coeff(const Expo& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? AN::zero(f_) : it->second;
}

void MultiPoly::add_term(const Expo& e, const AN& c0) {
    AN c = c0;
    if (!c.field()->same(*f_)) {
        if (c.field()->is_rational())
            c = AN::of(f_, c.rat_value());
        else if (f_->is_rational())
            fail(errc::field_mismatch, "extension coefficient in a rational polynomial");
        else
            fail(errc::field_mismatch, "coefficient from a different number field");
    }
    for (int x : e)
        if (x < 0) fail(errc::wrong_size, "negative exponent");
    auto it = t_.find(e);
    if (it == t_.end()) {
        if (!c.is_zero()) t_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(f_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a.f_->is_rational() && !b.f_->is_rational() ? MultiPoly(b.f_) : MultiPoly(a.f_);
    for (const auto& [e, c] : a.t_) r.add_term(e, c);
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a.f_->is_rational() && !b.f_->is_rational() ? MultiPoly(b.f_) : MultiPoly(a.f_);
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) {
            Expo e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const AN& c) const {
    MultiPoly r = c.field()->is_rational() ? MultiPoly(f_) : MultiPoly(c.field());
    if (c.is_zero()) return r;
    for (const auto& [e, v] : t_) r.add_term(e, v * c);
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(f_);
    for (const auto& [e, c] : t_) {
        int k = e[static_cast<size_t>(var)];
        if (k == 0) continue;
        Expo d = e;
        d[static_cast<size_t>(var)] -= 1;
        r.add_term(d, c * AN::of(f_, Rat(k)));
    }
    return r;
}

AN MultiPoly::eval(const std::vector<AN>& pt) const {
    AN acc = AN::zero(f_);
    for (const auto& [e, c] : t_) {
        for (size_t i = pt.size(); i < 4; ++i)
            if (e[i] != 0) fail(errc::wrong_size, "evaluation point has too few coordinates");
        AN term = c;
        for (size_t i = 0; i < pt.size() && i < 4; ++i)
            if (e[i] > 0) term *= pt[i].pow(static_cast<unsigned>(e[i]));
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::substituted(const Mat& A) const {
    if (A.rows() != 4 || A.cols() < 1 || A.cols() > 4)
        fail(errc::wrong_size, "substitution matrix must be 4 x k with k <= 4");
    FieldPtr rf = f_->is_rational() ? A.field() : f_;
    std::vector<MultiPoly> sub;
    for (int i = 0; i < 4; ++i) {
        std::vector<AN> row;
        for (int j = 0; j < A.cols(); ++j) row.push_back(A.at(i, j));
        sub.push_back(linear(rf, row));
    }
    MultiPoly r(rf);
    for (const auto& [e, c] : t_) {
        MultiPoly term = constant(c);
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < e[static_cast<size_t>(i)]; ++k) term = term * sub[static_cast<size_t>(i)];
        r += term;
    }
    return r;
}

const std::vector<Expo>& MultiPoly::cubic_monomials() {
    static const std::vector<Expo> mons = [] {
        std::vector<Expo> m;
        for (int e0 = 3; e0 >= 0; --e0)
            for (int e1 = 3 - e0; e1 >= 0; --e1)
                for (int e2 = 3 - e0 - e1; e2 >= 0; --e2)
                    m.push_back({e0, e1, e2, 3 - e0 - e1 - e2});
        return m;
    }();
    return mons;
}

std::vector<AN> MultiPoly::cubic_coeffs() const {
    if (!is_homogeneous(3))
        fail(errc::not_cubic, "coefficient vector requires a homogeneous cubic");
    std::vector<AN> v;
    v.reserve(20);
    for (const Expo& e : cubic_monomials()) v.push_back(coeff(e));
    return v;
}

// ---------------------------------------------------------------------------
// parsing (rational coefficients only)

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        ws();
        return i >= s.size();
    }
    char peek() {
        ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        ws();
        if (i >= s.size()) fail(errc::parse_error, "unexpected end of polynomial text");
        return s[i++];
    }
    Int integer() {
        ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail(errc::parse_error, "expected an integer at position " + std::to_string(start));
        return Int(s.substr(start, i - start));
    }
};

// grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' integer]
//   atom   := rational | 'x'digit | '(' expr ')'
struct Parser {
    Cursor c;

    MultiPoly expr() {
        char p = c.peek();
        bool neg = false;
        if (p == '+' || p == '-') {
            c.take();
            neg = (p == '-');
        }
        MultiPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            char op = c.peek();
            if (op != '+' && op != '-') return acc;
            c.take();
            MultiPoly t = term();
            acc = (op == '-') ? acc - t : acc + t;
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (c.peek() == '*') {
            c.take();
            acc = acc * factor();
        }
        return acc;
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        if (c.peek() != '^') return base;
        c.take();
        long e = c.integer().get_si();
        if (e < 0) fail(errc::parse_error, "negative exponents are not polynomial");
        MultiPoly out = MultiPoly::constant(AN(Rat(1)));
        for (long k = 0; k < e; ++k) out = out * base;
        return out;
    }

    MultiPoly atom() {
        char f = c.peek();
        if (std::isdigit(static_cast<unsigned char>(f))) {
            Int num = c.integer();
            Int den(1);
            if (c.peek() == '/') {
                c.take();
                den = c.integer();
                if (den == 0) fail(errc::parse_error, "zero denominator");
            }
            Rat q(num, den);
            q.canonicalize();
            return MultiPoly::constant(AN(q));
        }
        if (f == 'x') {
            c.take();
            char d = c.take();
            if (d < '0' || d > '3') fail(errc::parse_error, "variables are x0..x3");
            return MultiPoly::variable(NumberField::rationals(), d - '0');
        }
        if (f == '(') {
            c.take();
            MultiPoly inner = expr();
            if (c.take() != ')') fail(errc::parse_error, "expected ')'");
            return inner;
        }
        fail(errc::parse_error, std::string("unexpected character '") + f + "' in polynomial");
    }
};

} // namespace

MultiPoly MultiPoly::parse(const std::string& text) {
    Parser p{Cursor{text}};
    if (p.c.eof()) fail(errc::parse_error, "empty polynomial text");
    MultiPoly out = p.expr();
    if (!p.c.eof())
        fail(errc::parse_error,
             std::string("unexpected character '") + p.c.peek() + "' after the polynomial");
    return out;
}

std::string MultiPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        bool negated = false;
        std::string cs;
        if (c.is_rational()) {
            Rat v = c.rat_value();
            if (v < 0) {
                negated = true;
                v = -v;
            }
            cs = rat_str_short(v);
        } else {
            cs = "(" + c.str() + ")";
        }
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        first = false;
        bool has_vars = expo_deg(e) > 0;
        bool unit = (cs == "1");
        if (!unit || !has_vars) os << cs;
        bool started = !unit || !has_vars;
        for (int i = 0; i < 4; ++i) {
            int k = e[static_cast<size_t>(i)];
            if (k == 0) continue;
            if (started) os << "*";
            os << "x" << i;
            if (k > 1) os << "^" << k;
            started = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// projective points

ProjPoint::ProjPoint(FieldPtr f, std::vector<AN> coords) : f_(std::move(f)), c_(std::move(coords)) {
    if (c_.size() < 2) fail(errc::wrong_size, "projective point needs at least two coordinates");
    for (AN& a : c_) {
        if (a.field()->same(*f_)) continue;
        if (a.field()->is_rational())
            a = AN::of(f_, a.rat_value());
        else
            fail(errc::field_mismatch, "coordinate from a different number field");
    }
    int fnz = -1;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) {
            fnz = static_cast<int>(i);
            break;
        }
    if (fnz < 0) fail(errc::zero_form, "all projective coordinates are zero");
    if (f_->is_rational()) {
        std::vector<Rat> r;
        for (const AN& a : c_) r.push_back(a.rat_value());
        Int den = common_denominator(r);
        std::vector<Int> z;
        for (Rat& v : r) {
            v *= Rat(den);
            z.push_back(v.get_num());
        }
        Int content = integer_content(z);
        if (z[static_cast<size_t>(fnz)] < 0) content = -content;
        for (size_t i = 0; i < c_.size(); ++i) c_[i] = AN(Rat(z[i] / content));
    } else {
        // Over an extension, normalize only by a rational factor: make the
        // concatenated coefficient vectors coprime integers with the first
        // nonzero one positive. Dividing by a coordinate instead would drag
        // in its norm as a denominator and blow up every chord construction
        // built from the point.
        std::vector<Rat> all;
        for (const AN& a : c_)
            for (const Rat& r : a.coeffs()) all.push_back(r);
        Int den = common_denominator(all);
        std::vector<Int> z;
        for (Rat v : all) {
            v *= Rat(den);
            z.push_back(v.get_num());
        }
        Int content = integer_content(z);
        for (const Int& x : z) {
            if (x != 0) {
                if (x < 0) content = -content;
                break;
            }
        }
        AN scale = AN::of(f_, Rat(den) / Rat(content));
        for (AN& a : c_) a *= scale;
    }
}

ProjPoint ProjPoint::of_ints(const std::vector<long>& v) {
    std::vector<AN> c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(Rat(x));
    return ProjPoint(NumberField::rationals(), std::move(c));
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.c_.size() != b.c_.size()) return false;
    if (a.f_->is_rational() && b.f_->is_rational()) {
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    // over an extension the canonical form is unique only up to a rational
    // factor, so compare by cross-multiplication against a pivot coordinate
    size_t k = 0;
    while (k < a.c_.size() && a.c_[k].is_zero()) ++k;
    if (k == a.c_.size() || b.c_[k].is_zero()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] * b.c_[k] != b.c_[i] * a.c_[k]) return false;
    return true;
}

std::string ProjPoint::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << " : ";
        os << c_[i].str();
    }
    os << "]";
    return os.str();
}

std::vector<AN> linear_coeffs(const MultiPoly& f) {
    if (!f.is_homogeneous(1)) fail(errc::wrong_size, "not a linear form: " + f.str());
    std::vector<AN> c;
    for (int i = 0; i < 4; ++i) {
        Expo e{0, 0, 0, 0};
        e[static_cast<size_t>(i)] = 1;
        c.push_back(f.coeff(e));
    }
    return c;
}

std::pair<MultiPoly, MultiPoly> divmod_linear(const MultiPoly& p, const std::vector<AN>& l) {
    if (l.size() != 4) fail(errc::wrong_size, "linear form needs four coefficients");
    int j = -1;
    for (int i = 0; i < 4; ++i)
        if (!l[static_cast<size_t>(i)].is_zero()) {
            j = i;
            break;
        }
    if (j < 0) fail(errc::division_by_zero, "division by the zero linear form");
    FieldPtr f = p.field()->is_rational() ? field_of(l) : p.field();
    MultiPoly lf = MultiPoly::linear(f, l);
    AN inv = l[static_cast<size_t>(j)].inverse();
    MultiPoly q(f), rem = p + MultiPoly(f); // coerce into the working field
    // synthetic division treating x_j as the main variable, top exponent first
    while (true) {
        int top = 0;
        for (const auto& [e, c] : rem.terms()) top = std::max(top, e[static_cast<size_t>(j)]);
        if (top == 0) break;
        MultiPoly part(f); // coefficient of x_j^top, times x_j^(top-1)
        for (const auto& [e, c] : rem.terms()) {
            if (e[static_cast<size_t>(j)] != top) continue;
            Expo d = e;
            d[static_cast<size_t>(j)] = top - 1;
            part.add_term(d, c * inv);
        }
        q += part;
        rem -= part * lf;
    }
    return {q, rem};
}

// ---------------------------------------------------------------------------
// polars, chords, tangents

std::vector<AN> gradient(const MultiPoly& F, const std::vector<AN>& a) {
    std::vector<AN> g;
    for (int i = 0; i < 4; ++i) g.push_back(F.derivative(i).eval(a));
    return g;
}

MultiPoly polar_first(const MultiPoly& F, const std::vector<AN>& a) {
    MultiPoly r(F.field());
    for (int i = 0; i < 4; ++i) {
        if (static_cast<size_t>(i) < a.size() && !a[static_cast<size_t>(i)].is_zero())
            r += F.derivative(i).scaled(a[static_cast<size_t>(i)]);
    }
    return r;
}

MultiPoly polar_second(const MultiPoly& F, const std::vector<AN>& a) {
    std::vector<AN> g = gradient(F, a);
    FieldPtr f = field_of(g);
    if (f->is_rational()) f = F.field();
    return MultiPoly::linear(f, g);
}

std::array<AN, 4> line_expansion(const MultiPoly& F, const std::vector<AN>& a,
                                 const std::vector<AN>& y) {
    if (!F.is_homogeneous(3)) fail(errc::not_cubic, "line expansion requires a cubic form");
    std::vector<AN> ga = gradient(F, a), gy = gradient(F, y);
    AN c1 = AN(Rat(0)), c2 = AN(Rat(0));
    for (size_t i = 0; i < 4; ++i) {
        if (i < y.size()) c1 += y[i] * ga[i];
        if (i < a.size()) c2 += a[i] * gy[i];
    }
    return {F.eval(a), c1, c2, F.eval(y)};
}

ProjPoint third_intersection(const MultiPoly& F, const ProjPoint& a, const ProjPoint& y) {
    if (a.dim() != 4 || y.dim() != 4)
        fail(errc::wrong_size, "third intersection needs points of projective 3-space");
    std::vector<AN> gy = gradient(F, y.coords());
    AN p1 = AN(Rat(0));
    for (size_t i = 0; i < 4; ++i) p1 += a.coords()[i] * gy[i];
    AN fy = F.eval(y.coords());
    std::vector<AN> z;
    bool nonzero = false;
    for (size_t i = 0; i < 4; ++i) {
        z.push_back(fy * a.coords()[i] - p1 * y.coords()[i]);
        if (!z.back().is_zero()) nonzero = true;
    }
    if (!nonzero)
        fail(errc::degenerate_line, "line through " + a.str() + " and " + y.str() +
                                        " has no well-defined third intersection");
    return ProjPoint(field_of(z), std::move(z));
}

bool general_position(const std::vector<ProjPoint>& pts) {
    if (pts.size() != 5) fail(errc::wrong_size, "general position test expects five points");
    std::vector<AN> all;
    for (const ProjPoint& p : pts) {
        if (p.dim() != 4) fail(errc::wrong_size, "general position test expects points in P^3");
        for (const AN& c : p.coords()) all.push_back(c);
    }
    FieldPtr f = field_of(all);
    for (int skip = 0; skip < 5; ++skip) {
        Mat m(4, 4, f);
        int r = 0;
        for (int p = 0; p < 5; ++p) {
            if (p == skip) continue;
            for (int j = 0; j < 4; ++j) m.at(r, j) = pts[static_cast<size_t>(p)].coords()[static_cast<size_t>(j)];
            ++r;
        }
        if (m.det().is_zero()) return false;
    }
    return true;
}

} // namespace pfrep
