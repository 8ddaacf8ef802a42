#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "rotcanon/errors.hpp"
#include "rotcanon/graph.hpp"
#include "rotcanon/isomorphism.hpp"
#include "rotcanon/rotation.hpp"

namespace rotcanon {

// Exhaustive isomorphism oracles: backtracking over a BFS-flavored vertex
// order with degree and adjacency pruning.  Exact on anything desk scale.

inline constexpr int brute_force_vertex_cap = 20;
inline constexpr std::uint64_t brute_force_node_budget = 20'000'000;

namespace detail {

// Vertices of g ordered so that, within a component, each vertex follows some
// earlier neighbor; components start at their highest-degree vertex.
inline std::vector<int> mapping_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    for (;;) {
        int seed = -1;
        for (int v = 0; v < n; ++v)
            if (!placed[static_cast<std::size_t>(v)] && (seed < 0 || g.degree(v) > g.degree(seed)))
                seed = v;
        if (seed < 0) break;
        std::vector<int> queue{seed};
        placed[static_cast<std::size_t>(seed)] = true;
        for (std::size_t q = 0; q < queue.size(); ++q) {
            order.push_back(queue[q]);
            for (int u : g.neighbors(queue[q])) {
                if (placed[static_cast<std::size_t>(u)]) continue;
                placed[static_cast<std::size_t>(u)] = true;
                queue.push_back(u);
            }
        }
    }
    return order;
}

template <typename Accept>
std::optional<Isomorphism> backtrack_iso(const Graph& g, const Graph& h, Accept accept) {
    int n = g.vertex_count();
    if (h.vertex_count() != n || g.edge_count() != h.edge_count()) return std::nullopt;
    if (n > brute_force_vertex_cap)
        throw SizeError("brute-force search capped at " + std::to_string(brute_force_vertex_cap) +
                        " vertices");
    auto degree_multiset = [](const Graph& x) {
        std::vector<int> d;
        for (int v = 0; v < x.vertex_count(); ++v) d.push_back(x.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degree_multiset(g) != degree_multiset(h)) return std::nullopt;

    std::vector<int> order = mapping_order(g);
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<int> inverse(static_cast<std::size_t>(n), -1);
    std::uint64_t budget = brute_force_node_budget;

    auto consistent = [&](int v, int image) {
        if (h.degree(image) != g.degree(v)) return false;
        for (int u : g.neighbors(v)) {
            int mu = map[static_cast<std::size_t>(u)];
            if (mu >= 0 && !h.has_edge(image, mu)) return false;
        }
        for (int x : h.neighbors(image)) {
            int pre = inverse[static_cast<std::size_t>(x)];
            if (pre >= 0 && !g.has_edge(v, pre)) return false;
        }
        return true;
    };

    std::optional<Isomorphism> found;
    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (budget-- == 0) throw SizeError("brute-force node budget exhausted");
        if (depth == order.size()) {
            Isomorphism iso{map};
            if (!accept(iso)) return false;
            found = std::move(iso);
            return true;
        }
        int v = order[depth];
        for (int image = 0; image < n; ++image) {
            if (inverse[static_cast<std::size_t>(image)] >= 0 || !consistent(v, image)) continue;
            map[static_cast<std::size_t>(v)] = image;
            inverse[static_cast<std::size_t>(image)] = v;
            if (self(self, depth + 1)) return true;
            map[static_cast<std::size_t>(v)] = -1;
            inverse[static_cast<std::size_t>(image)] = -1;
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

}  // namespace detail

inline std::optional<Isomorphism> brute_force_iso(const Graph& g, const Graph& h) {
    return detail::backtrack_iso(g, h, [&](const Isomorphism& candidate) {
        return is_graph_isomorphism(g, h, candidate);
    });
}

inline std::optional<Isomorphism> brute_force_oriented_iso(const OrientedGraph& g,
                                                           const OrientedGraph& h) {
    return detail::backtrack_iso(g.graph(), h.graph(), [&](const Isomorphism& candidate) {
        return is_oriented_isomorphism(g, h, candidate);
    });
}

}  // namespace rotcanon
