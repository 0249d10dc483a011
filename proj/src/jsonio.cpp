// jsonio.cpp — see jsonio.hpp.
#include "pfrep/jsonio.hpp"

#include <fstream>
#include <sstream>

namespace pfrep {

namespace {

std::string monomial_str(const Expo& e) {
    if (expo_deg(e) == 0) return "1";
    std::ostringstream os;
    bool started = false;
    for (int i = 0; i < 4; ++i) {
        int k = e[static_cast<size_t>(i)];
        if (k == 0) continue;
        if (started) os << "*";
        os << "x" << i;
        if (k > 1) os << "^" << k;
        started = true;
    }
    return os.str();
}

// replace the letter t by x0 so MultiPoly::parse can read univariate text
std::string t_to_x0(const std::string& text) {
    std::string out;
    for (char ch : text)
        if (ch == 't')
            out += "x0";
        else
            out += ch;
    return out;
}

std::string strip_comments(const std::string& text) {
    std::string out;
    bool in_comment = false;
    for (char ch : text) {
        if (ch == '#') in_comment = true;
        if (ch == '\n') in_comment = false;
        if (!in_comment) out += ch;
    }
    return out;
}

} // namespace

// ---- writers ---------------------------------------------------------------

Json an_json(const AN& a) {
    Json out = Json::array();
    for (const Rat& c : a.coeffs()) out.push_back(rat_str(c));
    return out;
}

Json minpoly_json(const FieldPtr& f) {
    if (f->is_rational()) return Json();
    Json out = Json::array();
    for (const Rat& c : f->minpoly()) out.push_back(rat_str(c));
    return out;
}

Json point_json(const ProjPoint& p) {
    Json out = Json::array();
    for (const AN& c : p.coords()) out.push_back(an_json(c));
    return out;
}

Json linear_form_json(const MultiPoly& e) {
    Json out = Json::array();
    for (const AN& c : linear_coeffs(e)) out.push_back(an_json(c));
    return out;
}

Json poly_json(const MultiPoly& p) {
    Json out = Json::object();
    for (const auto& [e, c] : p.terms()) out[monomial_str(e)] = an_json(c);
    return out;
}

Json matrix_json(const SkewLinearMatrix& M) {
    Json rows = Json::array();
    for (int i = 0; i < M.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < M.size(); ++j) row.push_back(linear_form_json(M.at(i, j)));
        rows.push_back(std::move(row));
    }
    Json out = Json::object();
    out["size"] = M.size();
    out["entries"] = std::move(rows);
    return out;
}

Json search_log_json(const SearchLog& log) {
    Json out = Json::array();
    for (const SearchEvent& ev : log.events) {
        Json e = Json::object();
        e["plane_index"] = ev.plane_index;
        Json plane = Json::array();
        for (const AN& c : ev.plane) plane.push_back(an_json(c));
        e["plane"] = std::move(plane);
        e["candidate"] = ev.candidate ? point_json(*ev.candidate) : Json();
        e["verdict"] = verdict_name(ev.verdict);
        e["result"] = ev.result ? point_json(*ev.result) : Json();
        out.push_back(std::move(e));
    }
    return out;
}

Json representation_json(const Representation& rep) {
    Json out = Json::object();
    out["schema"] = kSchemaTag;
    out["kind"] = surface_kind_name(rep.kind);
    out["field_minpoly"] = minpoly_json(rep.field);
    out["constant_c"] = an_json(rep.constant);
    out["matrix"] = matrix_json(rep.M);
    Json frame = Json::array();
    for (const ProjPoint& p : rep.frame) frame.push_back(point_json(p));
    out["frame_points"] = std::move(frame);
    out["cone_vertex"] = rep.cone_vertex ? point_json(*rep.cone_vertex) : Json();
    out["provenance"] = search_log_json(rep.log);
    return out;
}

Json classification_json(const Classification& cl) {
    Json out = Json::object();
    out["schema"] = kSchemaTag;
    out["kind"] = surface_kind_name(cl.kind);
    out["field_minpoly"] = minpoly_json(cl.factors.field);
    out["constant"] = an_json(cl.factors.constant);
    Json planes = Json::array();
    for (const auto& [form, mult] : cl.factors.planes) {
        Json p = Json::object();
        p["form"] = linear_form_json(form);
        p["multiplicity"] = mult;
        planes.push_back(std::move(p));
    }
    out["planes"] = std::move(planes);
    out["quadric"] = cl.factors.quadric ? poly_json(*cl.factors.quadric) : Json();
    out["cone_vertex"] = cl.cone_vertex ? point_json(*cl.cone_vertex) : Json();
    return out;
}

// ---- readers ---------------------------------------------------------------

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rat_parse(j.get<std::string>());
    fail(errc::parse_error, "expected an integer or a \"p/q\" string: " + j.dump());
}

AN an_from_json(const FieldPtr& f, const Json& j) {
    if (!j.is_array()) return AN::of(f, rat_from_json(j));
    if (static_cast<int>(j.size()) > f->degree())
        fail(errc::parse_error, "field element has more coefficients than the field degree");
    std::vector<Rat> coeffs(static_cast<size_t>(f->degree()), Rat(0));
    for (size_t i = 0; i < j.size(); ++i) coeffs[i] = rat_from_json(j[i]);
    return AN(f, std::move(coeffs));
}

FieldPtr field_from_minpoly_json(const Json& j) {
    if (j.is_null()) return NumberField::rationals();
    if (j.is_string()) return field_from_minpoly_text(j.get<std::string>());
    if (!j.is_array()) fail(errc::parse_error, "minimal polynomial must be a coefficient list");
    std::vector<Rat> min;
    for (const Json& c : j) min.push_back(rat_from_json(c));
    return NumberField::make(std::move(min));
}

FieldPtr field_from_minpoly_text(const std::string& text) {
    MultiPoly p = MultiPoly::parse(t_to_x0(text));
    if (p.is_zero()) fail(errc::parse_error, "minimal polynomial must be nonzero");
    int deg = 0;
    for (const auto& [e, c] : p.terms()) {
        if (e[1] != 0 || e[2] != 0 || e[3] != 0)
            fail(errc::parse_error, "minimal polynomial must be univariate in t");
        if (e[0] > deg) deg = e[0];
    }
    std::vector<Rat> min(static_cast<size_t>(deg) + 1, Rat(0));
    for (const auto& [e, c] : p.terms()) min[static_cast<size_t>(e[0])] = c.rat_value();
    return NumberField::make(std::move(min));
}

MultiPoly surface_from_text(const std::string& text) {
    return MultiPoly::parse(strip_comments(text));
}

MultiPoly surface_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs"))
        fail(errc::parse_error, "surface document needs a \"coeffs\" object");
    FieldPtr f = field_from_minpoly_json(j.contains("field_minpoly") ? j["field_minpoly"] : Json());
    MultiPoly F(f);
    for (const auto& [key, val] : j["coeffs"].items()) {
        MultiPoly mono = MultiPoly::parse(key);
        if (mono.terms().size() != 1)
            fail(errc::parse_error, "coefficient key must be a single monomial: " + key);
        const auto& [e, c] = *mono.terms().begin();
        F.add_term(e, AN::of(f, c.rat_value()) * an_from_json(f, val));
    }
    return F;
}

MultiPoly read_surface_file(const std::string& path) {
    std::string text = read_text_file(path);
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') return surface_from_json(Json::parse(text));
    return surface_from_text(text);
}

void require_cubic_form(const MultiPoly& F) {
    if (F.is_zero()) fail(errc::zero_form, "the zero polynomial defines no surface");
    if (!F.is_homogeneous(F.deg()))
        fail(errc::not_homogeneous, "the surface polynomial must be homogeneous");
    if (F.deg() != 3) fail(errc::not_cubic, "the surface polynomial must be a cubic form");
}

std::vector<Rat> rat_list_from_text(const std::string& csv) {
    std::vector<Rat> out;
    std::string cur;
    std::istringstream in(csv);
    while (std::getline(in, cur, ',')) out.push_back(rat_parse(cur));
    if (out.empty()) fail(errc::parse_error, "empty coordinate list");
    return out;
}

ProjPoint point_from_text(const std::string& csv) {
    FieldPtr Q = NumberField::rationals();
    std::vector<AN> coords;
    for (const Rat& r : rat_list_from_text(csv)) coords.push_back(AN::of(Q, r));
    return ProjPoint(Q, std::move(coords));
}

ProjPoint point_from_json(const FieldPtr& f, const Json& j) {
    if (!j.is_array() || j.empty()) fail(errc::parse_error, "a point is an array of coordinates");
    std::vector<AN> coords;
    for (const Json& c : j) coords.push_back(an_from_json(f, c));
    return ProjPoint(field_of(coords), std::move(coords));
}

std::vector<ProjPoint> candidates_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("candidates"))
        fail(errc::parse_error, "candidate document needs a \"candidates\" array");
    FieldPtr Q = NumberField::rationals();
    std::vector<ProjPoint> out;
    for (const Json& pt : j["candidates"]) out.push_back(point_from_json(Q, pt));
    return out;
}

SkewLinearMatrix matrix_from_json(const FieldPtr& f, const Json& j) {
    if (!j.is_object() || !j.contains("size") || !j.contains("entries"))
        fail(errc::parse_error, "matrix document needs \"size\" and \"entries\"");
    int n = j["size"].get<int>();
    const Json& rows = j["entries"];
    if (n < 1 || static_cast<int>(rows.size()) != n)
        fail(errc::wrong_size, "matrix entry grid does not match its size");
    SkewLinearMatrix M(n, f);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
            fail(errc::wrong_size, "matrix entry grid does not match its size");
        for (int k = i + 1; k < n; ++k) {
            const Json& cell = rows[static_cast<size_t>(i)][static_cast<size_t>(k)];
            if (!cell.is_array() || cell.size() != 4)
                fail(errc::parse_error, "matrix entries are 4-arrays of field elements");
            std::vector<AN> coeffs;
            for (const Json& c : cell) coeffs.push_back(an_from_json(f, c));
            M.set(i, k, MultiPoly::linear(f, coeffs));
        }
    }
    // the lower triangle and diagonal must agree with what skewness dictates
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= i; ++k) {
            const Json& cell = rows[static_cast<size_t>(i)][static_cast<size_t>(k)];
            if (!cell.is_array() || cell.size() != 4)
                fail(errc::parse_error, "matrix entries are 4-arrays of field elements");
            std::vector<AN> coeffs;
            for (const Json& c : cell) coeffs.push_back(an_from_json(f, c));
            if (MultiPoly::linear(f, coeffs) != M.at(i, k))
                fail(errc::not_skew, "matrix document is not skew-symmetric");
        }
    return M;
}

VerifyDoc verify_doc_from_json(const Json& j) {
    if (j.contains("matrix")) {
        FieldPtr f =
            field_from_minpoly_json(j.contains("field_minpoly") ? j["field_minpoly"] : Json());
        VerifyDoc doc{f, matrix_from_json(f, j["matrix"]), std::nullopt};
        if (j.contains("constant_c") && !j["constant_c"].is_null())
            doc.constant = an_from_json(f, j["constant_c"]);
        return doc;
    }
    FieldPtr f = field_from_minpoly_json(j.contains("field_minpoly") ? j["field_minpoly"] : Json());
    return VerifyDoc{f, matrix_from_json(f, j), std::nullopt};
}

} // namespace pfrep
