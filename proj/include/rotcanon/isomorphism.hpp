#pragma once

#include <vector>

#include "rotcanon/graph.hpp"
#include "rotcanon/rotation.hpp"

namespace rotcanon {

// A vertex bijection g -> h; map[v] is the image of v.
struct Isomorphism {
    std::vector<int> map;
};

inline bool is_bijection(const Isomorphism& iso, int n) {
    if (static_cast<int>(iso.map.size()) != n) return false;
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int v : iso.map) {
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

// Edge-preserving in both directions.
inline bool is_graph_isomorphism(const Graph& g, const Graph& h, const Isomorphism& iso) {
    int n = g.vertex_count();
    if (h.vertex_count() != n || g.edge_count() != h.edge_count()) return false;
    if (!is_bijection(iso, n)) return false;
    for (int v = 0; v < n; ++v) {
        if (h.degree(iso.map[static_cast<std::size_t>(v)]) != g.degree(v)) return false;
        for (int u : g.neighbors(v))
            if (!h.has_edge(iso.map[static_cast<std::size_t>(v)], iso.map[static_cast<std::size_t>(u)]))
                return false;
    }
    return true;
}

// Edge-preserving and rotation-conjugating: the image of every fan successor
// is the fan successor of the image.
inline bool is_oriented_isomorphism(const OrientedGraph& g, const OrientedGraph& h,
                                    const Isomorphism& iso) {
    if (!is_graph_isomorphism(g.graph(), h.graph(), iso)) return false;
    for (int v = 0; v < g.graph().vertex_count(); ++v) {
        for (int u : g.graph().neighbors(v)) {
            Dart succ = g.rotation().successor({v, u});
            Dart image_succ = h.rotation().successor(
                {iso.map[static_cast<std::size_t>(v)], iso.map[static_cast<std::size_t>(u)]});
            if (image_succ.head != iso.map[static_cast<std::size_t>(succ.head)]) return false;
        }
    }
    return true;
}

}  // namespace rotcanon
