#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "rotcanon/connectivity.hpp"
#include "rotcanon/errors.hpp"
#include "rotcanon/graph.hpp"
#include "rotcanon/rotation.hpp"

namespace rotcanon {

namespace detail {

// Dense indexing of the 2|E| darts of a graph, plus the reverse-dart table.
struct DartIndex {
    explicit DartIndex(const Graph& g) : graph(&g) {
        int n = g.vertex_count();
        base.resize(static_cast<std::size_t>(n) + 1, 0);
        for (int v = 0; v < n; ++v) base[static_cast<std::size_t>(v) + 1] = base[static_cast<std::size_t>(v)] + g.degree(v);
        rev.resize(static_cast<std::size_t>(base.back()));
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v)) rev[static_cast<std::size_t>(index(v, u))] = index(u, v);
    }

    int index(int v, int u) const {
        const auto& ns = graph->neighbors(v);
        auto it = std::lower_bound(ns.begin(), ns.end(), u);
        return base[static_cast<std::size_t>(v)] + static_cast<int>(it - ns.begin());
    }

    Dart dart(int idx) const {
        auto it = std::upper_bound(base.begin(), base.end(), idx);
        int v = static_cast<int>(it - base.begin()) - 1;
        return {v, graph->neighbors(v)[static_cast<std::size_t>(idx - base[static_cast<std::size_t>(v)])]};
    }

    int count() const { return static_cast<int>(rev.size()); }

    const Graph* graph;
    std::vector<int> base;
    std::vector<int> rev;
};

// Product of (deg(v)-1)! over all vertices, saturating at max().
inline std::uint64_t rotation_search_space(const Graph& g) {
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int k = 2; k < g.degree(v); ++k) {
            std::uint64_t f = static_cast<std::uint64_t>(k);
            if (total > cap / f) return cap;
            total *= f;
        }
    }
    return total;
}

// Enumerates every fan assignment (one cyclic order per vertex, the smallest
// neighbor pinned first to quotient out rotations of the cycle) and invokes
// cb(fans) for each assignment whose face trace satisfies Euler's formula.
// cb returns false to stop the scan early.
template <typename Cb>
void scan_planar_rotations(const Graph& g, std::uint64_t guard, Cb cb) {
    if (!is_connected(g)) throw DomainError("planar rotation search needs a connected graph");
    std::uint64_t space = rotation_search_space(g);
    if (space > guard)
        throw SizeError("rotation search space " + std::to_string(space) + " exceeds guard " +
                        std::to_string(guard));

    int n = g.vertex_count();
    DartIndex idx(g);
    int dart_count = idx.count();
    int planar_faces = 2 - n + g.edge_count();

    std::vector<std::vector<int>> fans;
    fans.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) fans.push_back(g.neighbors(v));

    // flat (tail, head) -> dart index table; the scan is the hot path
    std::vector<int> dart_at(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            dart_at[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(u)] = idx.index(v, u);

    // fan_succ[i]: index of the fan-successor of dart i at its own tail.
    std::vector<int> fan_succ(static_cast<std::size_t>(dart_count));
    auto rebuild = [&](int v) {
        const auto& fan = fans[static_cast<std::size_t>(v)];
        int k = static_cast<int>(fan.size());
        const int* row = dart_at.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(n);
        for (int p = 0; p < k; ++p)
            fan_succ[static_cast<std::size_t>(row[fan[static_cast<std::size_t>(p)]])] =
                row[fan[static_cast<std::size_t>((p + 1) % k)]];
    };
    for (int v = 0; v < n; ++v) rebuild(v);

    std::vector<int> visited(static_cast<std::size_t>(dart_count), -1);
    int epoch = 0;
    for (;;) {
        ++epoch;
        int faces = 0;
        for (int d = 0; d < dart_count; ++d) {
            if (visited[static_cast<std::size_t>(d)] == epoch) continue;
            ++faces;
            int cur = d;
            while (visited[static_cast<std::size_t>(cur)] != epoch) {
                visited[static_cast<std::size_t>(cur)] = epoch;
                cur = fan_succ[static_cast<std::size_t>(idx.rev[static_cast<std::size_t>(cur)])];
            }
        }
        if (dart_count == 0) faces = 1;  // a lone vertex still bounds the outer face
        if (faces == planar_faces && !cb(fans)) return;

        int v = n - 1;
        for (; v >= 0; --v) {
            auto& fan = fans[static_cast<std::size_t>(v)];
            bool carried = fan.size() < 3 ||
                           !std::next_permutation(fan.begin() + 1, fan.end());
            rebuild(v);
            if (!carried) break;
        }
        if (v < 0) return;
    }
}

}  // namespace detail

// Face cycles of the embedding described by the rotation scheme, using the
// successor rule next(d) = rho_head(d)(reverse(d)).  Every dart lands in
// exactly one face.  Deterministic: faces start at the smallest unvisited dart.
inline std::vector<std::vector<Dart>> trace_faces(const OrientedGraph& og) {
    detail::DartIndex idx(og.graph());
    int dart_count = idx.count();
    std::vector<bool> visited(static_cast<std::size_t>(dart_count), false);
    std::vector<std::vector<Dart>> faces;
    for (int d = 0; d < dart_count; ++d) {
        if (visited[static_cast<std::size_t>(d)]) continue;
        std::vector<Dart> face;
        int cur = d;
        while (!visited[static_cast<std::size_t>(cur)]) {
            visited[static_cast<std::size_t>(cur)] = true;
            Dart dart = idx.dart(cur);
            face.push_back(dart);
            Dart next = og.rotation().successor(dart.reversed());
            cur = idx.index(next.tail, next.head);
        }
        faces.push_back(std::move(face));
    }
    return faces;
}

// Euler test V - E + F = 2.  A dartless single vertex is planar.
inline bool is_planar_rotation(const OrientedGraph& og) {
    if (!is_connected(og.graph()))
        throw DomainError("planarity of a rotation is defined per connected graph");
    int faces = static_cast<int>(trace_faces(og).size());
    if (og.graph().edge_count() == 0) faces = 1;
    return og.graph().vertex_count() - og.graph().edge_count() + faces == 2;
}

inline constexpr std::uint64_t default_rotation_guard = 50'000'000;

// All planar rotation schemes of g, found by exhaustive search over the
// independent cyclic fan orders.  Desk scale only.
inline std::vector<RotationScheme> enumerate_planar_rotations(
    const Graph& g, std::uint64_t guard = default_rotation_guard) {
    std::vector<RotationScheme> out;
    detail::scan_planar_rotations(g, guard, [&](const std::vector<std::vector<int>>& fans) {
        out.emplace_back(fans);
        return true;
    });
    return out;
}

inline std::optional<RotationScheme> find_planar_rotation(
    const Graph& g, std::uint64_t guard = default_rotation_guard) {
    std::optional<RotationScheme> out;
    detail::scan_planar_rotations(g, guard, [&](const std::vector<std::vector<int>>& fans) {
        out.emplace(fans);
        return false;
    });
    return out;
}

// Adds edge (a, b) inside the first traced face that visits both endpoints,
// splitting that face.  Keeps the embedding planar whenever the input was.
inline OrientedGraph add_edge_in_face(const OrientedGraph& og, int a, int b) {
    if (a == b) throw DomainError("cannot add a self-loop");
    if (og.graph().has_edge(a, b)) throw DomainError("edge already present");

    auto faces = trace_faces(og);
    const std::vector<Dart>* host = nullptr;
    Dart into_a, into_b;
    for (const auto& face : faces) {
        bool has_a = false, has_b = false;
        Dart da, db;
        for (const Dart& d : face) {
            if (!has_a && d.head == a) { has_a = true; da = d; }
            if (!has_b && d.head == b) { has_b = true; db = d; }
        }
        if (has_a && has_b) {
            host = &face;
            into_a = da;
            into_b = db;
            break;
        }
    }
    if (host == nullptr)
        throw DomainError("no face contains both endpoints");

    Graph g = og.graph();
    g.add_edge(a, b);
    std::vector<std::vector<int>> fans;
    fans.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < og.graph().vertex_count(); ++v) fans.push_back(og.rotation().fan(v));
    auto insert_after = [](std::vector<int>& fan, int after, int value) {
        auto it = std::find(fan.begin(), fan.end(), after);
        fan.insert(it + 1, value);
    };
    // New darts take over the face-successor slots of the chosen arrival darts.
    insert_after(fans[static_cast<std::size_t>(a)], into_a.tail, b);
    insert_after(fans[static_cast<std::size_t>(b)], into_b.tail, a);
    return {std::move(g), RotationScheme(std::move(fans))};
}

}  // namespace rotcanon
