// errors.hpp — error taxonomy shared by the whole engine.
//
// Every failure mode callers are expected to handle carries a stable code;
// the CLI maps codes to exit statuses and JSON diagnostics.
#pragma once

#include <stdexcept>
#include <string>

namespace pfrep {

enum class errc {
    division_by_zero,
    field_mismatch,
    zero_polynomial,
    not_monic,
    reducible_modulus,
    degree_cap_exceeded,
    parse_error,
    not_homogeneous,
    not_cubic,
    zero_form,
    wrong_size,
    not_skew,
    odd_size,
    singular_matrix,
    inconsistent_system,
    not_general_position,
    point_not_on_surface,
    singular_point,
    not_on_plane,
    degenerate_line,
    t_point_start,
    search_exhausted,
    verification_failed,
    factor_mismatch,
    unsupported,
    internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace pfrep
