#include "ringpat/io.hpp"

#include <cmath>
#include <map>
#include <set>

#include <json.hpp>

#include "ringpat/error.hpp"

namespace ringpat::io {

namespace {

using nlohmann::json;

json parse(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw RingError(ErrorCode::ParseError, e.what());
    }
}

[[noreturn]] void fail(const std::string& what) { throw RingError(ErrorCode::ParseError, what); }

const json& member(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing \"") + key + "\"");
    return j.at(key);
}

int as_int(const json& j)
{
    if (!j.is_number_integer()) fail("expected an integer, got " + j.dump());
    return j.get<int>();
}

double as_number(const json& j)
{
    if (!j.is_number()) fail("expected a number, got " + j.dump());
    return j.get<double>();
}

const json& as_array(const json& j, std::size_t min_size, const char* what)
{
    if (!j.is_array() || j.size() < min_size) fail(std::string("malformed ") + what + ": " + j.dump());
    return j;
}

Vertex as_vertex(const json& row)
{
    as_array(row, 2, "vertex");
    return {as_int(row[0]), as_int(row[1])};
}

std::map<Vertex, double> vertex_values(const json& rows, const char* what)
{
    std::map<Vertex, double> out;
    for (const json& row : as_array(rows, 0, what)) {
        as_array(row, 3, what);
        const Vertex v{as_int(row[0]), as_int(row[1])};
        if (!out.emplace(v, as_number(row[2])).second) fail(std::string("duplicate vertex in ") + what);
    }
    return out;
}

json vertex_rows(const LatticeComplex& c, std::span<const double> values)
{
    json rows = json::array();
    for (std::size_t i = 0; i < c.vertex_count(); ++i)
        rows.push_back({c.vertices()[i].m, c.vertices()[i].n, values[i]});
    return rows;
}

json square_rows(const LatticeComplex& c)
{
    json rows = json::array();
    for (const Vertex s : c.squares()) rows.push_back({s.m, s.n});
    return rows;
}

json field_json(const RhoField& field, double ell0)
{
    return {{"ell0", ell0}, {"squares", square_rows(field.complex())}, {"rho", vertex_rows(field.complex(), field.values())}};
}

FieldDocument field_from(const json& j)
{
    double ell0 = 1.0;
    if (j.contains("ell0")) ell0 = as_number(j.at("ell0"));
    if (!(ell0 > 0.0)) fail("ell0 must be positive");
    const std::map<Vertex, double> rho = vertex_values(member(j, "rho"), "rho");

    std::set<Vertex> squares;
    if (j.contains("squares")) {
        for (const json& row : as_array(j.at("squares"), 0, "squares")) squares.insert(as_vertex(row));
    } else {
        for (const auto& [v, x] : rho) {
            if (rho.contains(v + Vertex{1, 0}) && rho.contains(v + Vertex{1, 1}) && rho.contains(v + Vertex{0, 1}))
                squares.insert(v);
        }
    }
    if (squares.empty()) fail("field has no squares");
    auto complex = make_complex(squares);
    std::vector<double> values;
    values.reserve(complex->vertex_count());
    for (const Vertex v : complex->vertices()) {
        const auto it = rho.find(v);
        if (it == rho.end()) fail("rho missing at (" + std::to_string(v.m) + "," + std::to_string(v.n) + ")");
        values.push_back(it->second);
    }
    if (j.contains("squares") && rho.size() != values.size()) fail("rho has values at vertices outside the complex");
    // Vertices of rho that belong to no square are dropped when squares are inferred.
    return {RhoField(complex, std::move(values)), ell0};
}

json point_rows(const std::vector<Vertex>& keys, const std::vector<Point>& points)
{
    json rows = json::array();
    for (std::size_t i = 0; i < keys.size(); ++i)
        rows.push_back({keys[i].m, keys[i].n, points[i].real(), points[i].imag()});
    return rows;
}

std::vector<Point> points_from(const json& rows, const std::vector<Vertex>& keys, const char* what)
{
    std::map<Vertex, Point> by_key;
    for (const json& row : as_array(rows, 0, what)) {
        as_array(row, 4, what);
        by_key[{as_int(row[0]), as_int(row[1])}] = Point(as_number(row[2]), as_number(row[3]));
    }
    std::vector<Point> out;
    out.reserve(keys.size());
    for (const Vertex k : keys) {
        const auto it = by_key.find(k);
        if (it == by_key.end()) fail(std::string(what) + " missing at (" + std::to_string(k.m) + "," + std::to_string(k.n) + ")");
        out.push_back(it->second);
    }
    return out;
}

std::vector<Vertex> face_keys(const LatticeComplex& c)
{
    std::vector<Vertex> keys;
    keys.reserve(c.face_count());
    for (const Face& f : c.faces()) keys.push_back(f.base);
    return keys;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string complex_to_json(const LatticeComplex& c)
{
    json vertices = json::array();
    for (const Vertex v : c.vertices()) vertices.push_back({v.m, v.n});
    json boundary = json::array();
    for (const std::size_t i : c.boundary_vertices()) boundary.push_back({c.vertices()[i].m, c.vertices()[i].n, c.degree(i)});
    return dump({{"squares", square_rows(c)}, {"vertices", vertices}, {"boundary", boundary}});
}

ComplexPtr complex_from_json(const std::string& text)
{
    const json j = parse(text);
    std::set<Vertex> squares;
    for (const json& row : as_array(member(j, "squares"), 1, "squares")) squares.insert(as_vertex(row));
    return make_complex(squares);
}

std::string field_to_json(const RhoField& field, double ell0) { return dump(field_json(field, ell0)); }

FieldDocument field_from_json(const std::string& text) { return field_from(parse(text)); }

std::string boundary_to_json(const BoundaryConditions& bc)
{
    auto rows = [](const std::map<Vertex, double>& values) {
        json out = json::array();
        for (const auto& [v, x] : values) out.push_back({v.m, v.n, x});
        return out;
    };
    if (bc.mode == BoundaryMode::Dirichlet) return dump({{"mode", "dirichlet"}, {"values", rows(bc.dirichlet_rho)}});
    json j = {{"mode", "neumann"}, {"phi", rows(bc.neumann_phi)}};
    if (bc.gauge_vertex) j["gauge"] = {bc.gauge_vertex->m, bc.gauge_vertex->n};
    return dump(j);
}

BoundaryConditions boundary_from_json(const std::string& text)
{
    const json j = parse(text);
    const json& mode = member(j, "mode");
    if (mode == "dirichlet") return BoundaryConditions::dirichlet(vertex_values(member(j, "values"), "values"));
    if (mode == "neumann") {
        BoundaryConditions bc;
        bc.mode = BoundaryMode::Neumann;
        bc.neumann_phi = vertex_values(member(j, "phi"), "phi");
        if (j.contains("gauge")) bc.gauge_vertex = as_vertex(j.at("gauge"));
        return bc;
    }
    fail("mode must be \"dirichlet\" or \"neumann\"");
}

std::string pattern_to_json(const PlanarPattern& p)
{
    json j = field_json(p.rho, p.ell0);
    j["centers"] = point_rows(p.rho.complex().vertices(), p.centers);
    j["face_points"] = point_rows(face_keys(p.rho.complex()), p.face_points);
    return dump(j);
}

PlanarPattern pattern_from_json(const std::string& text)
{
    const json j = parse(text);
    FieldDocument doc = field_from(j);
    const LatticeComplex& c = doc.field.complex();
    std::vector<Point> centers = points_from(member(j, "centers"), c.vertices(), "centers");
    std::vector<Point> faces = points_from(member(j, "face_points"), face_keys(c), "face_points");
    return {std::move(doc.field), doc.ell0, std::move(centers), std::move(faces)};
}

bool has_centers(const std::string& text)
{
    const json j = parse(text);
    return j.is_object() && j.contains("centers");
}

std::string solve_report_to_json(const SolveReport& r)
{
    return dump({{"status", r.converged() ? "converged" : "max_iterations_exceeded"},
                 {"iterations", r.iterations},
                 {"gradient_norm", r.gradient_norm},
                 {"energy_trace", r.energy_trace},
                 {"gradient_trace", r.gradient_trace},
                 {"used_conjugate_gradient", r.used_conjugate_gradient},
                 {"warnings", r.warnings}});
}

std::string verify_report_to_json(const VerifyReport& r)
{
    json flags = json::array();
    for (const FaceOrientation& o : r.orientation) flags.push_back(o.consistent);
    json j = {{"max_edge_error", r.max_edge_error},
              {"max_face_error", r.max_face_error},
              {"orientation_mismatches", r.orientation_mismatches},
              {"edge_errors", r.edge_errors},
              {"face_errors", r.face_errors},
              {"orientation_consistent", flags}};
    j["embedded"] = r.embedded ? json(*r.embedded) : json(nullptr);
    return dump(j);
}

std::string energy_report_to_json(const EnergyReport& r)
{
    std::vector<double> g(r.gradient.data(), r.gradient.data() + r.gradient.size());
    return dump({{"energy", r.value},
                 {"gradient", g},
                 {"gradient_max_norm", r.gradient_max_norm},
                 {"max_closure_residual", r.max_closure_residual}});
}

}  // namespace ringpat::io
