#pragma once

#include "graph.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace k2n {

enum class Format { edges, json, dot };

inline Format format_from_name(const std::string& name) {
    if (name == "edges") return Format::edges;
    if (name == "json") return Format::json;
    if (name == "dot") return Format::dot;
    throw std::invalid_argument("unknown format: " + name);
}

// rough guess from a file name; bare names and "-" default to edge lists
inline Format guess_format(const std::string& path) {
    auto ends_with = [&](const std::string& suf) {
        return path.size() >= suf.size() &&
               path.compare(path.size() - suf.size(), suf.size(), suf) == 0;
    };
    if (ends_with(".json")) return Format::json;
    if (ends_with(".dot") || ends_with(".gv")) return Format::dot;
    return Format::edges;
}

// One edge "u v" per line, optional "#" comments. A line with a single
// number declares an isolated vertex, which keeps round trips exact.
inline Graph read_edge_list(std::istream& in) {
    std::vector<int> vs;
    std::vector<Edge> es;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long a, b;
        if (!(ls >> a)) continue; // blank
        if (ls >> b) {
            long long extra;
            if (ls >> extra)
                throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                         ": more than two numbers");
            vs.push_back(int(a));
            vs.push_back(int(b));
            es.push_back(mk_edge(int(a), int(b)));
        } else {
            vs.push_back(int(a));
        }
    }
    return Graph(std::move(vs), es);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    for (int v : g.vertices())
        if (g.degree(v) == 0) out << v << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

// {"n": 5, "edges": [[0,1],...]} for graphs on 0..n-1; graphs with id gaps
// carry an explicit "vertices" array instead of "n".
inline Graph graph_from_json(const nlohmann::json& j) {
    std::vector<int> vs;
    if (j.contains("vertices")) {
        for (auto& v : j.at("vertices")) vs.push_back(v.get<int>());
    } else {
        int n = j.at("n").get<int>();
        vs.resize(n);
        std::iota(vs.begin(), vs.end(), 0);
    }
    std::vector<Edge> es;
    for (auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::runtime_error("graph json: each edge must be a pair");
        es.push_back(mk_edge(e[0].get<int>(), e[1].get<int>()));
    }
    return Graph(std::move(vs), es); // endpoint check happens in the ctor
}

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    bool contiguous = g.order() == 0 || g.max_vertex_id() == g.order() - 1;
    if (contiguous)
        j["n"] = g.order();
    else
        j["vertices"] = g.vertices();
    auto& je = j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) je.push_back({u, v});
    return j;
}

inline void write_dot(std::ostream& out, const Graph& g) {
    out << "graph G {\n";
    for (int v : g.vertices()) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

inline Graph read_graph(std::istream& in, Format f) {
    switch (f) {
    case Format::edges: return read_edge_list(in);
    case Format::json: {
        nlohmann::json j;
        in >> j;
        return graph_from_json(j);
    }
    default: throw std::runtime_error("reading dot files is not supported");
    }
}

inline void write_graph(std::ostream& out, const Graph& g, Format f) {
    switch (f) {
    case Format::edges: write_edge_list(out, g); break;
    case Format::json: out << graph_to_json(g).dump(2) << "\n"; break;
    case Format::dot: write_dot(out, g); break;
    }
}

} // namespace k2n
