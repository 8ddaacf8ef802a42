#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "rotcanon/errors.hpp"

namespace rotcanon {

// One directed occurrence (tail -> head) of an undirected edge.
struct Dart {
    int tail = -1;
    int head = -1;

    constexpr Dart() = default;
    constexpr Dart(int t, int h) : tail(t), head(h) {}

    constexpr Dart reversed() const { return {head, tail}; }

    friend constexpr auto operator<=>(const Dart&, const Dart&) = default;
};

// Undirected simple graph on vertices 0..n-1.
// Neighbor lists stay sorted; self-loops and parallel edges are rejected.
class Graph {
public:
    explicit Graph(int vertex_count) {
        if (vertex_count < 1)
            throw DomainError("graph needs at least one vertex");
        adj_.resize(static_cast<std::size_t>(vertex_count));
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw DomainError("self-loop on vertex " + std::to_string(u));
        if (has_edge(u, v))
            throw DomainError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
        ++edge_count_;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    // All 2|E| darts in increasing (tail, head) order.
    std::vector<Dart> darts() const {
        std::vector<Dart> out;
        out.reserve(2 * static_cast<std::size_t>(edge_count_));
        for (int v = 0; v < vertex_count(); ++v)
            for (int u : adj_[v]) out.emplace_back(v, u);
        return out;
    }

    // All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (int v = 0; v < vertex_count(); ++v)
            for (int u : adj_[v])
                if (v < u) out.emplace_back(v, u);
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw DomainError("unknown vertex id " + std::to_string(v));
    }

    static void insert_sorted(std::vector<int>& xs, int v) {
        xs.insert(std::upper_bound(xs.begin(), xs.end(), v), v);
    }

    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// Relabels g through perm, where perm[v] is the new id of v.
inline Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw DomainError("permutation size does not match vertex count");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw DomainError("not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    Graph out(n);
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

}  // namespace rotcanon
