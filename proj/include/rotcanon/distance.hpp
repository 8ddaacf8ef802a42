#pragma once

#include <queue>
#include <vector>

#include "rotcanon/errors.hpp"
#include "rotcanon/graph.hpp"

namespace rotcanon {

// Shortest-path edge counts from a single source; -1 marks unreachable vertices.
struct DistanceTable {
    static constexpr int unreachable = -1;

    int source = 0;
    std::vector<int> dist;

    bool reachable(int v) const { return dist[static_cast<std::size_t>(v)] >= 0; }
    int at(int v) const { return dist[static_cast<std::size_t>(v)]; }
};

inline DistanceTable bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.vertex_count())
        throw DomainError("bfs source is not a vertex");
    DistanceTable table;
    table.source = source;
    table.dist.assign(static_cast<std::size_t>(g.vertex_count()), DistanceTable::unreachable);
    std::queue<int> frontier;
    table.dist[static_cast<std::size_t>(source)] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        for (int u : g.neighbors(v)) {
            if (table.dist[static_cast<std::size_t>(u)] >= 0) continue;
            table.dist[static_cast<std::size_t>(u)] = table.dist[static_cast<std::size_t>(v)] + 1;
            frontier.push(u);
        }
    }
    return table;
}

// dist[a][b] for all pairs; -1 where unreachable.
inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) out.push_back(bfs_distances(g, v).dist);
    return out;
}

}  // namespace rotcanon
