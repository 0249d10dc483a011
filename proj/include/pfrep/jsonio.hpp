// jsonio.hpp — deterministic JSON encoding of engine objects, plus the file
// and text parsers shared by the CLI and the end-to-end tests.
//
// Field elements are arrays of "p/q" strings (length = field degree,
// ascending powers of the generator). Documents carry "schema":
// "pfaffian-rep/1" and emit keys in fixed insertion order, so identical
// inputs produce byte-identical output.
#pragma once

#include "pfrep/classify.hpp"
#include "pfrep/points.hpp"
#include "pfrep/special.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pfrep {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "pfaffian-rep/1";

// ---- writers ---------------------------------------------------------------
Json an_json(const AN& a);
// null over Q; otherwise the monic minimal polynomial, constant term first
Json minpoly_json(const FieldPtr& f);
Json point_json(const ProjPoint& p);
// the four coefficients of a linear form (zero polynomial -> four zeros)
Json linear_form_json(const MultiPoly& e);
// {"x0^3": element, ...} in canonical term order; "1" keys a constant term
Json poly_json(const MultiPoly& p);
// {"size": n, "entries": [[entry x n] x n]}, every entry a linear form
Json matrix_json(const SkewLinearMatrix& M);
Json search_log_json(const SearchLog& log);
// the full representation document: schema, kind, field_minpoly, constant_c,
// matrix, frame_points, cone_vertex, provenance
Json representation_json(const Representation& rep);
Json classification_json(const Classification& cl);

// ---- readers ---------------------------------------------------------------
std::string read_text_file(const std::string& path);
Rat rat_from_json(const Json& j); // integer or "p/q" string
AN an_from_json(const FieldPtr& f, const Json& j);
FieldPtr field_from_minpoly_json(const Json& j); // null/absent -> Q
// "t^2 - 2": a monic polynomial in t with rational coefficients
FieldPtr field_from_minpoly_text(const std::string& text);
// polynomial text; '#' starts a to-end-of-line comment
MultiPoly surface_from_text(const std::string& text);
// {"field_minpoly": ..., "coeffs": {"x0^2*x1": element, ...}}
MultiPoly surface_from_json(const Json& j);
// dispatches on the first non-space byte: '{' -> JSON, else polynomial text
MultiPoly read_surface_file(const std::string& path);
// zero_form / not_cubic / not_homogeneous unless F is a nonzero cubic form
void require_cubic_form(const MultiPoly& F);
std::vector<Rat> rat_list_from_text(const std::string& csv);
ProjPoint point_from_text(const std::string& csv); // "1,0,-1/2,3"
ProjPoint point_from_json(const FieldPtr& f, const Json& j);
// {"candidates": [[c0,c1,c2,c3], ...]} with rational entries
std::vector<ProjPoint> candidates_from_json(const Json& j);
SkewLinearMatrix matrix_from_json(const FieldPtr& f, const Json& j);

// A representation document reduced to what verification needs.
struct VerifyDoc {
    FieldPtr field;
    SkewLinearMatrix M;
    std::optional<AN> constant; // claimed c with Pf(M) = c * F, when present
};
// accepts a full representation document or a bare {"size", "entries"} matrix
VerifyDoc verify_doc_from_json(const Json& j);

} // namespace pfrep
