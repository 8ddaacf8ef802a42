#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "rotcanon/errors.hpp"
#include "rotcanon/graph.hpp"

namespace rotcanon {

// Per-vertex cyclic successor order on outgoing darts.
//
// fan(v) lists v's neighbors; the successor of dart (v, fan[k]) is
// (v, fan[(k+1) mod deg]).  Fans are stored rotated so the smallest
// neighbor id comes first, which makes equality and serialization
// independent of where the cycle was cut when it was written down.
class RotationScheme {
public:
    explicit RotationScheme(std::vector<std::vector<int>> fans) : fans_(std::move(fans)) {
        for (auto& fan : fans_) {
            if (fan.empty()) continue;
            auto smallest = std::min_element(fan.begin(), fan.end());
            std::rotate(fan.begin(), smallest, fan.end());
            auto sorted = fan;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw DomainError("rotation fan repeats a neighbor");
        }
        build_positions();
    }

    int vertex_count() const { return static_cast<int>(fans_.size()); }

    const std::vector<int>& fan(int v) const {
        check_vertex(v);
        return fans_[v];
    }

    // rho_v applied to the dart (v, u); d.tail is v.
    Dart successor(const Dart& d) const {
        const auto& f = fans_[check_dart(d)];
        int p = position(d.tail, d.head);
        return {d.tail, f[(p + 1) % f.size()]};
    }

    Dart predecessor(const Dart& d) const {
        const auto& f = fans_[check_dart(d)];
        int p = position(d.tail, d.head);
        return {d.tail, f[(p + f.size() - 1) % f.size()]};
    }

    friend bool operator==(const RotationScheme& a, const RotationScheme& b) {
        return a.fans_ == b.fans_;
    }

private:
    int check_dart(const Dart& d) const {
        if (d.tail < 0 || d.tail >= vertex_count())
            throw DomainError("dart tail outside graph");
        return d.tail;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw DomainError("unknown vertex id " + std::to_string(v));
    }

    int position(int v, int u) const {
        const auto& ps = pos_[v];
        auto it = std::lower_bound(ps.begin(), ps.end(), std::pair<int, int>(u, -1));
        if (it == ps.end() || it->first != u)
            throw DomainError("dart (" + std::to_string(v) + "," + std::to_string(u) +
                              ") not covered by rotation");
        return it->second;
    }

    void build_positions() {
        pos_.assign(fans_.size(), {});
        for (std::size_t v = 0; v < fans_.size(); ++v) {
            auto& ps = pos_[v];
            ps.reserve(fans_[v].size());
            for (std::size_t k = 0; k < fans_[v].size(); ++k)
                ps.emplace_back(fans_[v][k], static_cast<int>(k));
            std::sort(ps.begin(), ps.end());
        }
    }

    std::vector<std::vector<int>> fans_;
    std::vector<std::vector<std::pair<int, int>>> pos_;  // per vertex: (neighbor, index), sorted
};

// rho^-1: reversing each cycle inverts the successor map.
inline RotationScheme invert_rotation(const RotationScheme& r) {
    std::vector<std::vector<int>> fans;
    fans.reserve(static_cast<std::size_t>(r.vertex_count()));
    for (int v = 0; v < r.vertex_count(); ++v) {
        auto fan = r.fan(v);
        std::reverse(fan.begin(), fan.end());
        fans.push_back(std::move(fan));
    }
    return RotationScheme(std::move(fans));
}

// An undirected graph together with a rotation scheme over exactly its darts.
class OrientedGraph {
public:
    OrientedGraph(Graph g, RotationScheme r) : graph_(std::move(g)), rotation_(std::move(r)) {
        if (rotation_.vertex_count() != graph_.vertex_count())
            throw DomainError("rotation scheme covers a different vertex set");
        for (int v = 0; v < graph_.vertex_count(); ++v) {
            auto fan = rotation_.fan(v);
            std::sort(fan.begin(), fan.end());
            if (fan != graph_.neighbors(v))
                throw DomainError("rotation fan of vertex " + std::to_string(v) +
                                  " does not match its neighbors");
        }
    }

    const Graph& graph() const { return graph_; }
    const RotationScheme& rotation() const { return rotation_; }

    friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

private:
    Graph graph_;
    RotationScheme rotation_;
};

// The mirror embedding: same graph, inverse rotation.
inline OrientedGraph mirrored(const OrientedGraph& og) {
    return {og.graph(), invert_rotation(og.rotation())};
}

inline OrientedGraph apply_permutation(const OrientedGraph& og, const std::vector<int>& perm) {
    Graph g = apply_permutation(og.graph(), perm);
    std::vector<std::vector<int>> fans(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < og.graph().vertex_count(); ++v) {
        std::vector<int> fan;
        fan.reserve(og.rotation().fan(v).size());
        for (int u : og.rotation().fan(v)) fan.push_back(perm[u]);
        fans[static_cast<std::size_t>(perm[v])] = std::move(fan);
    }
    return {std::move(g), RotationScheme(std::move(fans))};
}

}  // namespace rotcanon
