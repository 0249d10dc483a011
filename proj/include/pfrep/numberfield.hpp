// numberfield.hpp — algebraic number fields Q[t]/(m) and their elements.
//
// A NumberField is immutable and shared via shared_ptr; structural equality
// (same minimal polynomial) is what matters, pointer identity is only a fast
// path. Degree-1 fields are canonically Q: their elements are plain rationals
// and coerce silently into any other field.
#pragma once

#include "pfrep/errors.hpp"
#include "pfrep/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pfrep {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

inline constexpr int kDegreeCap = 12;

class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    // The rational field Q, i.e. Q[t]/(t). One shared instance.
    static const FieldPtr& rationals();

    // minpoly: monic with rational coefficients, ascending degree, degree in
    // [1, 12], irreducible over Q (verified unless assume_irreducible).
    static FieldPtr make(std::vector<Rat> minpoly, bool assume_irreducible = false,
                         std::optional<double> real_embedding_hint = std::nullopt);

    int degree() const { return static_cast<int>(min_.size()) - 1; }
    const std::vector<Rat>& minpoly() const { return min_; }
    bool is_rational() const { return degree() == 1; }
    bool same(const NumberField& o) const { return this == &o || min_ == o.min_; }
    std::optional<double> real_embedding_hint() const { return hint_; }

    // t^(degree+k) reduced mod minpoly, k in [0, degree-2]; used by multiplication
    const std::vector<std::vector<Rat>>& power_table() const { return pow_; }

private:
    explicit NumberField(std::vector<Rat> m, std::optional<double> hint);
    std::vector<Rat> min_;
    std::vector<std::vector<Rat>> pow_;
    std::optional<double> hint_;
};

// An element of a number field: coefficient vector of length field->degree()
// in the power basis of the generator.
class AN {
public:
    AN() : AN(Rat(0)) {}
    explicit AN(const Rat& r);
    AN(FieldPtr f, std::vector<Rat> coeffs);

    static AN zero(const FieldPtr& f);
    static AN one(const FieldPtr& f);
    static AN of(const FieldPtr& f, const Rat& r);
    static AN generator(const FieldPtr& f); // the class of t

    const FieldPtr& field() const { return f_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const; // lies in the prime field
    Rat rat_value() const;    // requires is_rational()

    AN operator-() const;
    friend AN operator+(const AN& a, const AN& b);
    friend AN operator-(const AN& a, const AN& b);
    friend AN operator*(const AN& a, const AN& b);
    friend AN operator/(const AN& a, const AN& b);
    AN& operator+=(const AN& b) { return *this = *this + b; }
    AN& operator-=(const AN& b) { return *this = *this - b; }
    AN& operator*=(const AN& b) { return *this = *this * b; }
    AN& operator/=(const AN& b) { return *this = *this / b; }
    friend bool operator==(const AN& a, const AN& b);
    friend bool operator!=(const AN& a, const AN& b) { return !(a == b); }
    // deterministic total order on same-field elements (coefficient lex)
    friend bool an_less(const AN& a, const AN& b);

    AN inverse() const;
    AN pow(unsigned e) const;

    std::string str() const; // human form, e.g. "1/2 - 3*t^2"

    // Coerce a and b into one common field (degree-1 fields embed anywhere;
    // otherwise minimal polynomials must agree). Throws FieldMismatch.
    static void unify(AN& a, AN& b);

private:
    FieldPtr f_;
    std::vector<Rat> c_;
};

} // namespace pfrep
