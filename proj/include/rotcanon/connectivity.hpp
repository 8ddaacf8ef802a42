#pragma once

#include <algorithm>
#include <vector>

#include "rotcanon/graph.hpp"

namespace rotcanon {

namespace detail {

// Connectivity of g with up to two vertices masked out.  Vertices set to -1
// are kept.  A graph whose surviving vertex set is empty counts as connected.
inline bool connected_excluding(const Graph& g, int skip_a, int skip_b) {
    int n = g.vertex_count();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int start = -1;
    int alive = 0;
    for (int v = 0; v < n; ++v) {
        if (v == skip_a || v == skip_b) continue;
        ++alive;
        if (start < 0) start = v;
    }
    if (alive == 0) return true;
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (u == skip_a || u == skip_b || seen[static_cast<std::size_t>(u)]) continue;
            seen[static_cast<std::size_t>(u)] = true;
            ++reached;
            stack.push_back(u);
        }
    }
    return reached == alive;
}

}  // namespace detail

inline bool is_connected(const Graph& g) { return detail::connected_excluding(g, -1, -1); }

// Components sorted by smallest member, members ascending.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n; ++v) {
        if (comp[static_cast<std::size_t>(v)] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{v};
        comp[static_cast<std::size_t>(v)] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            out[static_cast<std::size_t>(id)].push_back(x);
            for (int u : g.neighbors(x)) {
                if (comp[static_cast<std::size_t>(u)] >= 0) continue;
                comp[static_cast<std::size_t>(u)] = id;
                stack.push_back(u);
            }
        }
        std::sort(out[static_cast<std::size_t>(id)].begin(), out[static_cast<std::size_t>(id)].end());
    }
    return out;
}

// Largest k in {1,2,3} such that g has more than k vertices and removing any
// k-1 vertices leaves it connected; 0 if disconnected (or a single vertex).
// Deliberately exhaustive: every single vertex and every vertex pair is tried.
inline int connectivity_level(const Graph& g) {
    if (!is_connected(g)) return 0;
    int n = g.vertex_count();
    if (n <= 1) return 0;
    int level = 1;
    if (n > 2) {
        for (int v = 0; v < n; ++v)
            if (!detail::connected_excluding(g, v, -1)) return level;
        level = 2;
    }
    if (n > 3) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (!detail::connected_excluding(g, a, b)) return level;
        level = 3;
    }
    return level;
}

}  // namespace rotcanon
