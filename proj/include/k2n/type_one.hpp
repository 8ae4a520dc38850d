#pragma once

#include "enumerate.hpp"
#include "graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace k2n {

// A graph presented as a Hamiltonian reference cycle plus chords. The class
// of interest: every chord crosses at most one other chord, and a crossing
// pair ab, cd must have both ac,bd or both ad,bc on the cycle. 2-connected
// outerplanar graphs are the chord-crossing-free members.
struct ChordDiagram {
    std::vector<int> cycle;   // vertices in cyclic order
    std::vector<Edge> chords; // non-cycle edges, stored sorted

    Graph graph() const {
        int n = int(cycle.size());
        std::vector<Edge> es;
        for (int i = 0; i < n; ++i) es.push_back(mk_edge(cycle[size_t(i)], cycle[size_t((i + 1) % n)]));
        for (const Edge& c : chords) es.push_back(c);
        return Graph(cycle, es);
    }
};

inline bool validate_diagram(const ChordDiagram& d, std::string* why = nullptr) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    int n = int(d.cycle.size());
    if (n < 3) return fail("cycle shorter than 3");
    std::vector<int> sorted = d.cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return fail("repeated vertex on cycle");
    auto pos_of = [&](int v) {
        auto it = std::find(d.cycle.begin(), d.cycle.end(), v);
        return it == d.cycle.end() ? -1 : int(it - d.cycle.begin());
    };
    std::vector<Edge> cs = d.chords;
    std::sort(cs.begin(), cs.end());
    if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) return fail("duplicate chord");
    for (const Edge& c : d.chords) {
        int pa = pos_of(c.first), pb = pos_of(c.second);
        if (pa < 0 || pb < 0) return fail("chord end off the cycle");
        int gap = std::abs(pa - pb);
        if (gap == 1 || gap == n - 1) return fail("chord duplicates a cycle edge");
    }
    if (why) why->clear();
    return true;
}

namespace detail {

inline int cycle_pos(const ChordDiagram& d, int v) {
    auto it = std::find(d.cycle.begin(), d.cycle.end(), v);
    if (it == d.cycle.end()) throw std::invalid_argument("vertex not on reference cycle");
    return int(it - d.cycle.begin());
}

inline bool cycle_adjacent(const ChordDiagram& d, int u, int v) {
    int n = int(d.cycle.size());
    int gap = std::abs(cycle_pos(d, u) - cycle_pos(d, v));
    return gap == 1 || gap == n - 1;
}

} // namespace detail

// Crossing test for two non-incident chords: their four ends interleave
// around the cycle.
inline bool chords_cross(const ChordDiagram& d, Edge e1, Edge e2) {
    e1 = mk_edge(e1.first, e1.second);
    e2 = mk_edge(e2.first, e2.second);
    auto is_chord = [&](const Edge& e) {
        return std::find(d.chords.begin(), d.chords.end(), e) != d.chords.end();
    };
    if (!is_chord(e1) || !is_chord(e2)) throw std::invalid_argument("chords_cross: not a chord of the diagram");
    if (e1 == e2 || e1.first == e2.first || e1.first == e2.second || e1.second == e2.first ||
        e1.second == e2.second)
        throw std::invalid_argument("chords_cross: chords share an end");
    int n = int(d.cycle.size());
    int pa = detail::cycle_pos(d, e1.first);
    auto rel = [&](int p) { return (p - pa + n) % n; };
    int b = rel(detail::cycle_pos(d, e1.second));
    int c = rel(detail::cycle_pos(d, e2.first));
    int dd = rel(detail::cycle_pos(d, e2.second));
    return (c < b) != (dd < b);
}

// Membership test for the restricted-crossing class: every chord crosses at
// most one other, and each crossing pair sits on consecutive cycle vertices
// in one of the two legal patterns.
inline bool is_type_one(const ChordDiagram& d) {
    int m = int(d.chords.size());
    std::vector<int> crossings(size_t(m), 0);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const Edge &ei = d.chords[size_t(i)], &ej = d.chords[size_t(j)];
            if (ei.first == ej.first || ei.first == ej.second || ei.second == ej.first ||
                ei.second == ej.second)
                continue; // incident chords never count as crossing
            if (!chords_cross(d, ei, ej)) continue;
            ++crossings[size_t(i)];
            ++crossings[size_t(j)];
            if (crossings[size_t(i)] > 1 || crossings[size_t(j)] > 1) return false;
            // orient so the cycle order is a, c, b, d
            int n = int(d.cycle.size());
            int a = ei.first, b = ei.second;
            int pa = detail::cycle_pos(d, a);
            auto rel = [&](int v) { return (detail::cycle_pos(d, v) - pa + n) % n; };
            int c = ej.first, dd = ej.second;
            if (rel(c) > rel(dd)) std::swap(c, dd);
            bool first = detail::cycle_adjacent(d, a, c) && detail::cycle_adjacent(d, b, dd);
            bool second = detail::cycle_adjacent(d, a, dd) && detail::cycle_adjacent(d, b, c);
            if (!first && !second) return false;
        }
    }
    return true;
}

// Exhaustive recognition: search Hamiltonian cycles of G, return the first
// presentation that passes is_type_one. Membership may depend on the cycle,
// so the test is existential.
inline std::optional<ChordDiagram> recognize_type_one(const Graph& g, int max_order = 16) {
    if (g.order() > max_order)
        throw std::invalid_argument("recognize_type_one: order exceeds bound " + std::to_string(max_order));
    int n = g.order();
    if (n < 3 || g.size() < n || !is_connected(g)) return std::nullopt;
    for (int v : g.vertices())
        if (g.degree(v) < 2) return std::nullopt;

    std::vector<int> verts = g.vertices();
    std::vector<int> path{verts[0]};
    std::vector<char> used(verts.size(), 0);
    auto index = [&](int v) { return int(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()); };
    used[0] = 1;
    std::optional<ChordDiagram> found;

    auto rec = [&](auto&& self) -> bool {
        if (int(path.size()) == n) {
            if (!g.has_edge(path.back(), path.front())) return false;
            // canonical direction: second vertex smaller than last, halves the search
            if (n > 2 && path[1] > path.back()) return false;
            ChordDiagram d;
            d.cycle = path;
            for (const Edge& e : g.edges()) {
                int gap = std::abs(detail::cycle_pos(d, e.first) - detail::cycle_pos(d, e.second));
                if (gap != 1 && gap != n - 1) d.chords.push_back(e);
            }
            std::sort(d.chords.begin(), d.chords.end());
            if (is_type_one(d)) {
                found = d;
                return true;
            }
            return false;
        }
        for (int w : g.neighbors(path.back())) {
            if (used[size_t(index(w))]) continue;
            used[size_t(index(w))] = 1;
            path.push_back(w);
            if (self(self)) return true;
            path.pop_back();
            used[size_t(index(w))] = 0;
        }
        return false;
    };
    rec(rec);
    return found;
}

// Seeded generator: start from a plain cycle and repeatedly add either a
// lone non-crossing chord or a legal crossing pair, keeping the diagram in
// the class the whole time.
inline ChordDiagram random_type_one(int n_vertices, std::uint32_t seed) {
    if (n_vertices < 3) throw std::invalid_argument("random_type_one: need at least 3 vertices");
    int n = n_vertices;
    ChordDiagram d;
    d.cycle.resize(size_t(n));
    std::iota(d.cycle.begin(), d.cycle.end(), 0);
    Rng rng(seed);

    auto has_chord = [&](Edge e) {
        return std::find(d.chords.begin(), d.chords.end(), e) != d.chords.end();
    };
    auto try_add = [&](std::vector<Edge> add) {
        for (const Edge& e : add) {
            int gap = std::abs(e.first - e.second);
            if (gap <= 1 || gap >= n - 1) return false;
            if (has_chord(e)) return false;
        }
        if (add.size() == 2 && add[0] == add[1]) return false;
        ChordDiagram trial = d;
        for (const Edge& e : add) trial.chords.push_back(e);
        std::sort(trial.chords.begin(), trial.chords.end());
        if (!is_type_one(trial)) return false;
        d = std::move(trial);
        return true;
    };

    int attempts = 4 * n;
    for (int t = 0; t < attempts; ++t) {
        if (n >= 6 && rng.chance(40)) {
            // crossing pair ab, cd with a,c and b,d consecutive on the cycle
            int i = rng.below(n);
            int j = rng.below(n);
            int a = i, c = (i + 1) % n, b = j, dd = (j + 1) % n;
            if (a == b || a == dd || c == b || c == dd) continue;
            try_add({mk_edge(a, b), mk_edge(c, dd)});
        } else if (n >= 4) {
            int a = rng.below(n);
            int b = rng.below(n);
            if (a == b) continue;
            try_add({mk_edge(a, b)});
        }
    }
    return d;
}

inline nlohmann::json diagram_to_json(const ChordDiagram& d) {
    nlohmann::json j;
    j["cycle"] = d.cycle;
    j["chords"] = nlohmann::json::array();
    for (const Edge& c : d.chords) j["chords"].push_back({c.first, c.second});
    return j;
}

inline ChordDiagram diagram_from_json(const nlohmann::json& j) {
    ChordDiagram d;
    if (!j.contains("cycle") || !j["cycle"].is_array())
        throw std::invalid_argument("diagram json: missing cycle");
    for (const auto& v : j["cycle"]) d.cycle.push_back(v.get<int>());
    if (j.contains("chords"))
        for (const auto& c : j["chords"]) {
            if (!c.is_array() || c.size() != 2) throw std::invalid_argument("diagram json: bad chord");
            d.chords.push_back(mk_edge(c[0].get<int>(), c[1].get<int>()));
        }
    std::sort(d.chords.begin(), d.chords.end());
    std::string why;
    if (!validate_diagram(d, &why)) throw std::invalid_argument("diagram json: " + why);
    return d;
}

} // namespace k2n
