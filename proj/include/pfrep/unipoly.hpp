// unipoly.hpp — univariate polynomials over a number field.
//
// Coefficients are stored ascending and kept trimmed (no leading zeros), so
// deg() is size-1 and the zero polynomial has an empty vector. All gcds are
// returned monic, which makes every derived quantity deterministic.
#pragma once

#include "pfrep/numberfield.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pfrep {

class UniPoly {
public:
    explicit UniPoly(FieldPtr f) : f_(std::move(f)) {}
    UniPoly(FieldPtr f, std::vector<AN> coeffs);

    static UniPoly x(const FieldPtr& f);
    static UniPoly constant(const AN& c);
    // lift a rational-coefficient polynomial (ascending) into K[x]
    static UniPoly from_rational(const FieldPtr& f, const std::vector<Rat>& q);

    const FieldPtr& field() const { return f_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<AN>& coeffs() const { return c_; }
    AN coeff(int i) const; // zero beyond the degree
    AN lead() const;       // requires nonzero

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly scaled(const AN& c) const;
    UniPoly monic() const; // requires nonzero
    UniPoly derivative() const;
    AN eval(const AN& v) const;
    UniPoly shift(const AN& c) const; // f(x + c)

    // Euclidean division a = q*b + r, deg r < deg b. b must be nonzero.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    // exact division; throws FactorMismatch when the remainder is nonzero
    static UniPoly exact_div(const UniPoly& a, const UniPoly& b);
    // monic gcd (zero if both inputs are zero)
    static UniPoly gcd(UniPoly a, UniPoly b);

    std::string str(const std::string& var = "x") const;

private:
    FieldPtr f_;
    std::vector<AN> c_;
    void trim();
};

// Sylvester resultant. Formal degrees (fa, fb) may exceed the true degrees —
// useful when a family of specializations must share one matrix shape; passing
// -1 uses the actual degree. Both inputs nonzero.
AN resultant(const UniPoly& a, const UniPoly& b, int fa = -1, int fb = -1);

// Yun decomposition f = const * prod s_i^i with the s_i monic, squarefree,
// pairwise coprime; only parts with deg > 0 are reported, ordered by i.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

} // namespace pfrep
