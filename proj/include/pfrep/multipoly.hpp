// multipoly.hpp — polynomials in x0..x3 over a number field, and projective
// points.
//
// Terms are kept in a canonical order (total degree descending, then
// lexicographic descending on exponent tuples with x0 > x1 > x2 > x3), which
// fixes printing, coefficient vectors and every derived enumeration. Ternary
// polynomials are represented in the same type with x3 unused.
#pragma once

#include "pfrep/linalg.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace pfrep {

using Expo = std::array<int, 4>;

inline int expo_deg(const Expo& e) { return e[0] + e[1] + e[2] + e[3]; }

// strict order putting higher degree first, then lex-descending
struct TermOrder {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = expo_deg(a), db = expo_deg(b);
        if (da != db) return da > db;
        return a > b;
    }
};

class MultiPoly {
public:
    explicit MultiPoly(FieldPtr f) : f_(std::move(f)) {}

    static MultiPoly constant(const AN& c);
    static MultiPoly variable(const FieldPtr& f, int i);
    // sum of coeffs[i] * x_i
    static MultiPoly linear(const FieldPtr& f, const std::vector<AN>& coeffs);
    // rational-coefficient polynomial text, e.g. "x0^3 - 2*x1*x2^2 + 1/3*x3^3"
    static MultiPoly parse(const std::string& text);

    const FieldPtr& field() const { return f_; }
    const std::map<Expo, AN, TermOrder>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int deg() const; // total degree, -1 for zero
    bool is_homogeneous(int d) const;
    AN coeff(const Expo& e) const;
    void add_term(const Expo& e, const AN& c);

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
    MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
    MultiPoly scaled(const AN& c) const;

    MultiPoly derivative(int var) const;
    AN eval(const std::vector<AN>& pt) const; // pt may be shorter than 4 if the
                                              // trailing variables are unused
    // F(A*y): substitute x_i = sum_j A(i,j) * y_j. A has 4 rows and at most 4
    // columns; fewer columns restrict to the first variables of the result.
    MultiPoly substituted(const Mat& A) const;

    // the 20 cubic monomials in canonical order: x0^3 first, x3^3 last
    static const std::vector<Expo>& cubic_monomials();
    // coefficient vector over the cubic monomials; requires homogeneous cubic
    std::vector<AN> cubic_coeffs() const;

    std::string str() const;

private:
    FieldPtr f_;
    std::map<Expo, AN, TermOrder> t_;
};

// A point of projective space (any dimension >= 2), stored in canonical form:
// over Q, primitive integer coordinates with the first nonzero one positive;
// over an extension, the rational content is divided out (scaling a
// coordinate to 1 instead would pull its norm denominator into every
// coordinate, which compounds through chained chord constructions).
class ProjPoint {
public:
    ProjPoint(FieldPtr f, std::vector<AN> coords);
    static ProjPoint of_ints(const std::vector<long>& v); // rational convenience

    const FieldPtr& field() const { return f_; }
    const std::vector<AN>& coords() const { return c_; }
    int dim() const { return static_cast<int>(c_.size()); } // coordinate count

    friend bool operator==(const ProjPoint& a, const ProjPoint& b);
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

    std::string str() const; // "[c0 : c1 : ...]"

private:
    FieldPtr f_;
    std::vector<AN> c_;
};

// widest number field appearing among the given elements (Q if all rational)
FieldPtr field_of(const std::vector<AN>& v);

// coefficient 4-vector of a linear form (throws unless every term has degree 1)
std::vector<AN> linear_coeffs(const MultiPoly& f);

// Division by a linear form l: p = q*l + r with r free of the pivot variable
// (the first variable with a nonzero coefficient in l). l divides p exactly
// iff r is zero.
std::pair<MultiPoly, MultiPoly> divmod_linear(const MultiPoly& p, const std::vector<AN>& l);

// gradient of F at a point (one entry per variable, length 4)
std::vector<AN> gradient(const MultiPoly& F, const std::vector<AN>& a);

// first polar of F at a: sum_i a_i dF/dx_i (a quadric when F is a cubic)
MultiPoly polar_first(const MultiPoly& F, const std::vector<AN>& a);
// second polar of F at a: sum_i x_i dF/dx_i(a) (a linear form)
MultiPoly polar_second(const MultiPoly& F, const std::vector<AN>& a);

// coefficients of F(a + t*y) as a polynomial in t, degree 0..3 (F cubic)
std::array<AN, 4> line_expansion(const MultiPoly& F, const std::vector<AN>& a,
                                 const std::vector<AN>& y);

// Third intersection with V(F) of the line through a (on the surface) and y,
// beyond a and y's own contributions: F(y)*a - (sum_i a_i dF/dx_i(y))*y.
// Throws DegenerateLine when that combination vanishes identically (the line
// lies on the surface or the data is too degenerate to name a third point).
ProjPoint third_intersection(const MultiPoly& F, const ProjPoint& a, const ProjPoint& y);

// no four of the five points coplanar (and in particular pairwise distinct)
bool general_position(const std::vector<ProjPoint>& pts);

} // namespace pfrep
