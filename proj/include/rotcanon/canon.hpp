#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rotcanon/connectivity.hpp"
#include "rotcanon/distance.hpp"
#include "rotcanon/embedding.hpp"
#include "rotcanon/errors.hpp"
#include "rotcanon/graph.hpp"
#include "rotcanon/isomorphism.hpp"
#include "rotcanon/rotation.hpp"

namespace rotcanon {

// Canonical codes for graphs carrying a rotation scheme, built in three steps:
//   1. grow a canonical spanning tree outward from the designated dart,
//   2. unroll a canonical list of all 2|E| darts by walking that tree,
//   3. rename vertices by the position of their first occurrence.
// The result depends only on the abstract (graph, rotation, dart) triple,
// never on how vertices happen to be numbered.

// A spanning tree rooted at the designated dart's tail.  parent_edges holds
// one (parent, child) dart per non-root vertex, in construction order.
class SpanningTree {
public:
    SpanningTree(int vertex_count, int root, std::vector<Dart> parent_edges)
        : root_(root), parent_edges_(std::move(parent_edges)), n_(vertex_count),
          member_(static_cast<std::size_t>(vertex_count) * static_cast<std::size_t>(vertex_count), false) {
        for (const Dart& d : parent_edges_) {
            member_[cell(d.tail, d.head)] = true;
            member_[cell(d.head, d.tail)] = true;
        }
    }

    int root() const { return root_; }
    const std::vector<Dart>& parent_edges() const { return parent_edges_; }

    bool contains(int u, int v) const { return member_[cell(u, v)]; }
    bool contains(const Dart& d) const { return contains(d.tail, d.head); }

private:
    std::size_t cell(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int root_;
    std::vector<Dart> parent_edges_;
    int n_;
    std::vector<bool> member_;
};

// All 2|E| darts in traversal order; the designated dart comes first.
struct EdgeList {
    std::vector<Dart> darts;
};

// The renamed list: integer pairs starting (1,2), ranks contiguous from 1.
struct CanonicalCode {
    std::vector<std::pair<int, int>> pairs;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

    std::string to_string() const {
        std::string out;
        for (const auto& [a, b] : pairs) {
            if (!out.empty()) out += ' ';
            out += '(' + std::to_string(a) + ',' + std::to_string(b) + ')';
        }
        return out;
    }
};

namespace detail {

inline void require_dart(const Graph& g, const Dart& d, const char* role) {
    if (d.tail < 0 || d.tail >= g.vertex_count() || !g.has_edge(d.tail, d.head))
        throw DomainError(std::string(role) + " dart is not an edge of the graph");
}

}  // namespace detail

// Step 1.  Every neighbor of s becomes a tree child directly.  Each vertex w
// at distance d >= 2 is attached by replaying the same walk: starting from the
// designated dart, rotate the active dart (u,v) by rho_u while
// d(u,w) <= d(v,w), otherwise advance to rho_v(v,u); after d-1 advances the
// active tail is w's parent.  Ties always resolve to the first feasible dart
// in rotation order, so the tree depends only on (E, rho, designated).
inline SpanningTree canonical_spanning_tree(const OrientedGraph& og, Dart designated) {
    const Graph& g = og.graph();
    detail::require_dart(g, designated, "designated");
    int n = g.vertex_count();
    int s = designated.tail;
    auto dist = all_pairs_distances(g);
    for (int v = 0; v < n; ++v)
        if (dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] < 0)
            throw DomainError("spanning tree needs a connected graph");

    std::vector<Dart> parents;
    parents.reserve(static_cast<std::size_t>(n) - 1);
    for (int v : g.neighbors(s)) parents.emplace_back(s, v);

    for (int d = 2; d < n; ++d) {
        for (int w = 0; w < n; ++w) {
            if (dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)] != d) continue;
            Dart active = designated;
            for (int step = 0; step < d - 1; ++step) {
                int spins = g.degree(active.tail) + 1;
                while (dist[static_cast<std::size_t>(active.tail)][static_cast<std::size_t>(w)] <=
                       dist[static_cast<std::size_t>(active.head)][static_cast<std::size_t>(w)]) {
                    active = og.rotation().successor(active);
                    if (--spins == 0)
                        throw InternalError("no fan dart advances toward the target");
                }
                active = og.rotation().successor(active.reversed());
            }
            parents.emplace_back(active.tail, w);
        }
    }
    return {n, s, std::move(parents)};
}

// Step 2.  Walk starting at the designated dart: a tree dart hands control to
// the far endpoint (next = rho_v(v,u)), any other dart stays at its tail
// (next = rho_u(u,v)).  The walk closes after exactly 2|E| darts.
inline EdgeList canonical_edge_list(const OrientedGraph& og, const SpanningTree& t,
                                    Dart designated) {
    detail::require_dart(og.graph(), designated, "designated");
    if (!t.contains(designated))
        throw DomainError("designated edge is not in the spanning tree");
    int target = 2 * og.graph().edge_count();
    EdgeList list;
    list.darts.reserve(static_cast<std::size_t>(target));
    Dart active = designated;
    do {
        list.darts.push_back(active);
        if (static_cast<int>(list.darts.size()) > target)
            throw InternalError("edge walk did not close after 2|E| steps");
        active = t.contains(active) ? og.rotation().successor(active.reversed())
                                    : og.rotation().successor(active);
    } while (active != designated);
    if (static_cast<int>(list.darts.size()) != target)
        throw InternalError("edge walk closed before covering every dart");
    return list;
}

// First-occurrence rank (1-based) of each vertex in the list; -1 if absent.
inline std::vector<int> first_occurrence_ranks(const EdgeList& l, int vertex_count) {
    std::vector<int> rank(static_cast<std::size_t>(vertex_count), -1);
    int next = 1;
    for (const Dart& d : l.darts) {
        if (rank[static_cast<std::size_t>(d.tail)] < 0) rank[static_cast<std::size_t>(d.tail)] = next++;
        if (rank[static_cast<std::size_t>(d.head)] < 0) rank[static_cast<std::size_t>(d.head)] = next++;
    }
    return rank;
}

// Step 3.  Replace every vertex by the number of distinct vertices seen up to
// (and including) its first occurrence; the designated dart becomes (1,2).
inline CanonicalCode rename(const EdgeList& l) {
    int max_vertex = -1;
    for (const Dart& d : l.darts) max_vertex = std::max({max_vertex, d.tail, d.head});
    auto rank = first_occurrence_ranks(l, max_vertex + 1);
    CanonicalCode code;
    code.pairs.reserve(l.darts.size());
    for (const Dart& d : l.darts)
        code.pairs.emplace_back(rank[static_cast<std::size_t>(d.tail)],
                                rank[static_cast<std::size_t>(d.head)]);
    return code;
}

// code(G, rho, s, t): the composition of the three steps.
inline CanonicalCode code(const OrientedGraph& og, Dart designated) {
    return rename(canonical_edge_list(og, canonical_spanning_tree(og, designated), designated));
}

namespace detail {

struct CodeWithList {
    CanonicalCode code;
    EdgeList list;
};

inline CodeWithList code_with_list(const OrientedGraph& og, Dart designated) {
    EdgeList list = canonical_edge_list(og, canonical_spanning_tree(og, designated), designated);
    CanonicalCode c = rename(list);
    return {std::move(c), std::move(list)};
}

inline void require_planar3(const Graph& g) {
    if (connectivity_level(g) != 3) throw DomainError("graph is not 3-connected");
}

}  // namespace detail

// Lexicographically smallest code over every designated dart and both
// rotation schemes {rho, rho^-1}; a pure graph invariant for planar
// 3-connected graphs.  trust_input skips the 3-connectivity and planarity
// verification (both are exhaustive desk-scale checks).
inline CanonicalCode canonical_form_planar3(const OrientedGraph& og, bool trust_input = false) {
    if (!trust_input) {
        detail::require_planar3(og.graph());
        if (!is_planar_rotation(og)) throw DomainError("rotation scheme is not planar");
    }
    std::optional<CanonicalCode> best;
    for (const OrientedGraph& candidate : {og, mirrored(og)}) {
        for (const Dart& d : candidate.graph().darts()) {
            CanonicalCode c = code(candidate, d);
            if (!best || c < *best) best = std::move(c);
        }
    }
    if (!best) throw DomainError("graph has no edges to designate");
    return *best;
}

inline CanonicalCode canonical_form_planar3(const Graph& g) {
    detail::require_planar3(g);
    auto rotation = find_planar_rotation(g);
    if (!rotation) throw DomainError("no planar rotation scheme found");
    return canonical_form_planar3(OrientedGraph(g, *rotation), true);
}

// Isomorphism test: fix one rotation and one designated dart for g, then scan
// every dart of h under both of h's rotation schemes.  On a code match the
// witness bijection pairs vertices with equal first-occurrence ranks; it is
// validated before being returned.
inline std::optional<Isomorphism> is_isomorphic_planar3(const OrientedGraph& g,
                                                        const OrientedGraph& h,
                                                        bool trust_input = false) {
    if (!trust_input) {
        detail::require_planar3(g.graph());
        detail::require_planar3(h.graph());
        if (!is_planar_rotation(g) || !is_planar_rotation(h))
            throw DomainError("rotation scheme is not planar");
    }
    if (g.graph().vertex_count() != h.graph().vertex_count() ||
        g.graph().edge_count() != h.graph().edge_count())
        return std::nullopt;
    if (g.graph().edge_count() == 0) return Isomorphism{{0}};

    auto g_darts = g.graph().darts();
    auto base = detail::code_with_list(g, g_darts.front());
    auto g_rank = first_occurrence_ranks(base.list, g.graph().vertex_count());

    for (const OrientedGraph& candidate : {h, mirrored(h)}) {
        for (const Dart& d : candidate.graph().darts()) {
            auto probe = detail::code_with_list(candidate, d);
            if (probe.code != base.code) continue;
            auto h_rank = first_occurrence_ranks(probe.list, h.graph().vertex_count());
            std::vector<int> by_rank(h_rank.size() + 1, -1);
            for (std::size_t v = 0; v < h_rank.size(); ++v)
                by_rank[static_cast<std::size_t>(h_rank[v])] = static_cast<int>(v);
            Isomorphism iso;
            iso.map.resize(g_rank.size());
            for (std::size_t v = 0; v < g_rank.size(); ++v)
                iso.map[v] = by_rank[static_cast<std::size_t>(g_rank[v])];
            if (!is_graph_isomorphism(g.graph(), h.graph(), iso))
                throw InternalError("matching codes produced an invalid vertex bijection");
            return iso;
        }
    }
    return std::nullopt;
}

inline std::optional<Isomorphism> is_isomorphic_planar3(const Graph& g, const Graph& h) {
    detail::require_planar3(g);
    detail::require_planar3(h);
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    auto rg = find_planar_rotation(g);
    auto rh = find_planar_rotation(h);
    if (!rg || !rh) throw DomainError("no planar rotation scheme found");
    return is_isomorphic_planar3(OrientedGraph(g, *rg), OrientedGraph(h, *rh), true);
}

}  // namespace rotcanon
