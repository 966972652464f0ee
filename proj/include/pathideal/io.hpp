#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "pathideal/clutter.hpp"
#include "pathideal/depth_oracle.hpp"
#include "pathideal/error.hpp"
#include "pathideal/forest.hpp"
#include "pathideal/monomial_ideal.hpp"
#include "pathideal/simplicial.hpp"
#include "pathideal/spine.hpp"
#include "pathideal/suspension.hpp"

namespace pathideal::io {

using nlohmann::json;

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::FileFormat, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::FileFormat, std::string("invalid JSON: ") + e.what());
    }
}

inline json vertex_list(VertexSet s)
{
    return json(s.to_vector());
}

inline VertexSet vertex_set_from(const json& j)
{
    if (!j.is_array())
        throw Error(ErrorCode::FileFormat, "expected an array of vertices");
    VertexSet s;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw Error(ErrorCode::FileFormat, "vertex must be an integer");
        const int x = v.get<int>();
        if (!VertexSet::valid_vertex(x))
            throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(x));
        if (s.contains(x))
            throw Error(ErrorCode::FileFormat, "vertex " + std::to_string(x) + " repeated in a set");
        s.insert(x);
    }
    return s;
}

inline int require_n(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw Error(ErrorCode::FileFormat, "missing integer field \"n\"");
    return j["n"].get<int>();
}

inline std::vector<VertexSet> set_list(const json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_array())
        throw Error(ErrorCode::FileFormat, std::string("missing array field \"") + key + "\"");
    std::vector<VertexSet> out;
    for (const auto& s : j[key])
        out.push_back(vertex_set_from(s));
    return out;
}

// Forests ---------------------------------------------------------------

inline Forest forest_from_json(const json& j)
{
    const int n = require_n(j);
    std::vector<Edge> edges;
    if (!j.contains("edges") || !j["edges"].is_array())
        throw Error(ErrorCode::FileFormat, "missing array field \"edges\"");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw Error(ErrorCode::FileFormat, "forest edges are pairs of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Forest::build(n, edges);
}

/// First line n, then one "u v" pair per line. Blank lines and lines
/// starting with '#' are ignored.
inline Forest forest_from_edge_list(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n < 1)
                throw Error(ErrorCode::FileFormat, "line " + std::to_string(line_no) + ": expected vertex count");
        } else {
            int u = 0;
            int v = 0;
            if (!(fields >> u >> v))
                throw Error(ErrorCode::FileFormat, "line " + std::to_string(line_no) + ": expected \"u v\"");
            edges.emplace_back(u, v);
        }
        std::string extra;
        if (fields >> extra)
            throw Error(ErrorCode::FileFormat, "line " + std::to_string(line_no) + ": trailing text");
    }
    if (n < 0)
        throw Error(ErrorCode::FileFormat, "empty forest file");
    return Forest::build(n, edges);
}

/// Either format, chosen by the first non-blank character.
inline Forest parse_forest(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return forest_from_json(parse_json(text));
    return forest_from_edge_list(text);
}

inline Forest read_forest(const std::string& path) { return parse_forest(read_file(path)); }

inline json edges_json(const std::vector<Edge>& edges)
{
    json out = json::array();
    for (const auto& [u, v] : edges)
        out.push_back({u, v});
    return out;
}

inline json to_json(const Forest& f)
{
    json j{{"n", f.n_vertices()}, {"edges", edges_json(f.edges())}};
    if (f.vertices() != VertexSet::range(f.n_vertices()))
        j["vertices"] = vertex_list(f.vertices());
    return j;
}

inline std::string to_edge_list(const Forest& f)
{
    std::string out = std::to_string(f.n_vertices()) + "\n";
    for (const auto& [u, v] : f.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline std::string to_dot(const Forest& f, const std::string& name = "forest")
{
    std::string out = "graph " + name + " {\n";
    for (int v : f.vertices())
        out += "  " + std::to_string(v) + ";\n";
    for (const auto& [u, v] : f.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    return out + "}\n";
}

inline std::string to_dot(const Graph& g, const std::string& name = "skeleton")
{
    std::string out = "graph " + name + " {\n";
    for (int v : g.vertices)
        out += "  " + std::to_string(v) + ";\n";
    for (const auto& [u, v] : g.edges)
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    return out + "}\n";
}

// Clutters, ideals, complexes --------------------------------------------

inline json set_list_json(const std::vector<VertexSet>& sets)
{
    json out = json::array();
    for (VertexSet s : sets)
        out.push_back(vertex_list(s));
    return out;
}

/// `{ "n", "edges" }`, or `{ "n", "generators" }` read as an ideal's
/// minimal generators.
inline Clutter clutter_from_json(const json& j)
{
    const int n = require_n(j);
    if (j.contains("generators"))
        return Clutter::minimal(n, set_list(j, "generators"));
    return Clutter(n, set_list(j, "edges"));
}

inline Clutter read_clutter(const std::string& path) { return clutter_from_json(parse_json(read_file(path))); }

inline json to_json(const Clutter& c)
{
    json j{{"n", c.n_vertices()}, {"edges", set_list_json(c.edges())}};
    if (c.vertices() != VertexSet::range(c.n_vertices()))
        j["vertices"] = vertex_list(c.vertices());
    return j;
}

inline json to_json(const MonomialIdeal& i)
{
    return {{"n", i.n_vertices()}, {"generators", set_list_json(i.minimal_generators().generators())}};
}

inline SimplicialComplex complex_from_json(const json& j)
{
    return SimplicialComplex(require_n(j), set_list(j, "facets"));
}

inline SimplicialComplex read_complex(const std::string& path) { return complex_from_json(parse_json(read_file(path))); }

inline json to_json(const SimplicialComplex& d)
{
    return {{"n", d.n_vertices()}, {"facets", set_list_json(d.facets())}};
}

/// x_0, [F_1], x_1, ..., [F_s], x_0
inline json to_json(const SpecialCycle& cycle)
{
    json out = json::array();
    for (std::size_t i = 0; i < cycle.facets.size(); ++i) {
        out.push_back(cycle.vertices[i]);
        out.push_back(vertex_list(cycle.facets[i]));
    }
    if (!cycle.vertices.empty())
        out.push_back(cycle.vertices.front());
    return out;
}

// Reports -------------------------------------------------------------

inline json to_json(const CoverReport& r, bool unmixed)
{
    return {{"alpha0", r.alpha0},
            {"beta1", r.beta1},
            {"cover", vertex_list(r.witness_cover)},
            {"matching", set_list_json(r.witness_matching)},
            {"koenig", r.alpha0 == r.beta1},
            {"unmixed", unmixed}};
}

inline json to_json(const SuspensionWitness& w)
{
    return {{"base", vertex_list(w.base_vertices)}, {"pendant_paths", w.pendant_paths}};
}

inline json to_json(const CmClassification& c)
{
    json j{{"is_cm", c.is_cm}, {"basis", c.basis}, {"witness", nullptr}};
    if (c.witness)
        j["witness"] = to_json(*c.witness);
    return j;
}

inline json to_json(const DepthReport& r)
{
    return {{"n", r.n},
            {"depth", r.depth},
            {"projective_dimension", r.projective_dimension},
            {"height", r.height},
            {"krull_dim", r.krull_dim},
            {"is_cm", r.is_cm}};
}

inline json to_json(const SpineParams& p)
{
    return {{"n", p.n}, {"ell", p.ell}, {"b", p.b}, {"c", p.c}};
}

inline json to_json(const SpineDepthReport& r)
{
    return {{"params", to_json(r.params)},
            {"depth", r.depth},
            {"sdepth_lower", r.sdepth_lower},
            {"height", r.height},
            {"krull_dim", r.krull_dim},
            {"is_cm", r.is_cm}};
}

inline json to_json(const HomologyProfile& h)
{
    return {{"first_dimension", -1}, {"ranks", h.ranks}};
}

inline json error_json(const Error& e)
{
    return {{"error", to_string(e.code())}, {"message", e.what()}};
}

} // namespace pathideal::io
