// rational.cpp — see rational.hpp.
#include "pfrep/rational.hpp"

#include "pfrep/errors.hpp"

#include <cctype>

namespace pfrep {

const char* errc_name(errc c) {
    switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::not_monic: return "NotMonic";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::degree_cap_exceeded: return "DegreeCapExceeded";
    case errc::parse_error: return "ParseError";
    case errc::not_homogeneous: return "NotHomogeneous";
    case errc::not_cubic: return "NotCubic";
    case errc::zero_form: return "ZeroForm";
    case errc::wrong_size: return "WrongSize";
    case errc::not_skew: return "NotSkew";
    case errc::odd_size: return "OddSize";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::inconsistent_system: return "InconsistentSystem";
    case errc::not_general_position: return "NotGeneralPosition";
    case errc::point_not_on_surface: return "PointNotOnSurface";
    case errc::singular_point: return "SingularPoint";
    case errc::not_on_plane: return "NotOnPlane";
    case errc::degenerate_line: return "DegenerateLine";
    case errc::t_point_start: return "TPointStart";
    case errc::search_exhausted: return "SearchExhausted";
    case errc::verification_failed: return "VerificationFailed";
    case errc::factor_mismatch: return "FactorMismatch";
    case errc::unsupported: return "Unsupported";
    case errc::internal: return "Internal";
    }
    return "Unknown";
}

Rat rat_parse(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) fail(errc::parse_error, "empty rational literal");
    // mpq_class(str) aborts on garbage, so validate by hand.
    auto is_int = [](const std::string& u) {
        if (u.empty()) return false;
        size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
        if (i == u.size()) return false;
        for (; i < u.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
        return true;
    };
    size_t slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(t)) fail(errc::parse_error, "bad rational literal '" + s + "'");
            Rat r(t);
            r.canonicalize();
            return r;
        }
        std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) fail(errc::parse_error, "bad rational literal '" + s + "'");
        Rat r(num + "/" + den);
        if (r.get_den() == 0) fail(errc::division_by_zero, "zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail(errc::parse_error, "bad rational literal '" + s + "'");
    }
}

std::string rat_str(const Rat& a) {
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

std::string rat_str_short(const Rat& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return rat_str(a);
}

Int common_denominator(const std::vector<Rat>& v) {
    Int l = 1;
    for (const Rat& a : v) {
        Int d = a.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

Int integer_content(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& a : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    return g;
}

} // namespace pfrep
