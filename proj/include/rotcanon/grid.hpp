#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "rotcanon/errors.hpp"

namespace rotcanon {

// Directed grid graphs with marked edges and the n^4 / n^8 weight functions
// that make minimum weight paths unique.  Row 0 is the north edge of the
// grid; rows grow southward, columns eastward.

struct GridVertex {
    int row = 0;
    int col = 0;

    friend constexpr auto operator<=>(const GridVertex&, const GridVertex&) = default;

    std::string to_string() const {
        return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
    }
};

struct GridEdge {
    GridVertex from;
    GridVertex to;
    bool marked = false;

    friend constexpr auto operator<=>(const GridEdge&, const GridEdge&) = default;
};

enum class GridDirection { north, south, east, west };

inline GridDirection direction_of(const GridVertex& from, const GridVertex& to) {
    int dr = to.row - from.row;
    int dc = to.col - from.col;
    if (dr == 0 && dc == 1) return GridDirection::east;
    if (dr == 0 && dc == -1) return GridDirection::west;
    if (dr == -1 && dc == 0) return GridDirection::north;
    if (dr == 1 && dc == 0) return GridDirection::south;
    throw DomainError("grid edge " + from.to_string() + "->" + to.to_string() +
                      " is not a unit step");
}

class GridGraph {
public:
    // Weight totals are 64-bit; the side and area caps keep
    // hops * (n^8 + n^4 + n) far from overflow.
    static constexpr int max_side = 50;
    static constexpr int max_area = 10'000;

    GridGraph(int rows, int cols) : GridGraph(rows, cols, std::max(rows, cols)) {}

    GridGraph(int rows, int cols, int side) : rows_(rows), cols_(cols), side_(side) {
        if (rows < 1 || cols < 1) throw DomainError("grid needs positive dimensions");
        if (rows * cols > max_area) throw DomainError("grid exceeds the supported area");
        if (side < std::max(rows, cols))
            throw DomainError("weight parameter n must be at least the grid side");
        if (side > max_side) throw DomainError("weight parameter n exceeds the supported range");
        out_.resize(static_cast<std::size_t>(rows * cols));
    }

    static GridGraph full(int rows, int cols) {
        GridGraph g(rows, cols);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                if (c + 1 < cols) {
                    g.add_edge({r, c}, {r, c + 1});
                    g.add_edge({r, c + 1}, {r, c});
                }
                if (r + 1 < rows) {
                    g.add_edge({r, c}, {r + 1, c});
                    g.add_edge({r + 1, c}, {r, c});
                }
            }
        }
        return g;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int side() const { return side_; }
    int vertex_count() const { return rows_ * cols_; }

    int index(const GridVertex& v) const {
        check_vertex(v);
        return v.row * cols_ + v.col;
    }

    GridVertex vertex(int idx) const { return {idx / cols_, idx % cols_}; }

    void add_edge(const GridVertex& from, const GridVertex& to, bool marked = false) {
        direction_of(from, to);  // validates the step
        int f = index(from);
        int t = index(to);
        auto& outs = out_[static_cast<std::size_t>(f)];
        for (const auto& [existing, _] : outs)
            if (existing == t) throw DomainError("duplicate grid edge");
        outs.emplace_back(t, marked);
        std::sort(outs.begin(), outs.end());
        ++edge_count_;
    }

    int edge_count() const { return edge_count_; }

    const std::vector<std::pair<int, bool>>& out_edges(int from_index) const {
        return out_[static_cast<std::size_t>(from_index)];
    }

    bool edge_marked(const GridVertex& from, const GridVertex& to) const {
        int t = index(to);
        for (const auto& [idx, marked] : out_[static_cast<std::size_t>(index(from))])
            if (idx == t) return marked;
        throw DomainError("grid edge " + from.to_string() + "->" + to.to_string() +
                          " is not present");
    }

    bool has_edge(const GridVertex& from, const GridVertex& to) const {
        int t = index(to);
        for (const auto& [idx, _] : out_[static_cast<std::size_t>(index(from))])
            if (idx == t) return true;
        return false;
    }

    // All edges sorted by (from, to).
    std::vector<GridEdge> edges() const {
        std::vector<GridEdge> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (int f = 0; f < vertex_count(); ++f)
            for (const auto& [t, marked] : out_[static_cast<std::size_t>(f)])
                out.push_back({vertex(f), vertex(t), marked});
        return out;
    }

private:
    void check_vertex(const GridVertex& v) const {
        if (v.row < 0 || v.row >= rows_ || v.col < 0 || v.col >= cols_)
            throw DomainError("grid vertex " + v.to_string() + " outside the grid");
    }

    int rows_;
    int cols_;
    int side_;
    int edge_count_ = 0;
    std::vector<std::vector<std::pair<int, bool>>> out_;  // per vertex: (to index, marked)
};

inline std::int64_t pow4(int n) {
    std::int64_t x = n;
    return x * x * x * x;
}

inline std::int64_t pow8(int n) { return pow4(n) * pow4(n); }

// w0: n^4 for east/west, n^4 + i for a north edge in column i, n^4 - i for a
// south edge in column i.
inline std::int64_t weight_w0(const GridEdge& e, int n) {
    if (e.from.col >= n || e.to.col >= n)
        throw DomainError("column index must stay below the weight parameter n");
    switch (direction_of(e.from, e.to)) {
        case GridDirection::east:
        case GridDirection::west:
            return pow4(n);
        case GridDirection::north:
            return pow4(n) + e.from.col;
        case GridDirection::south:
            return pow4(n) - e.from.col;
    }
    throw InternalError("unreachable direction");
}

// w: w0 plus n^8 on marked edges, giving marked edges absolute priority.
inline std::int64_t weight_w(const GridEdge& e, int n) {
    return weight_w0(e, n) + (e.marked ? pow8(n) : 0);
}

enum class GridWeight { w0, w, unit };

inline std::int64_t edge_weight(const GridEdge& e, int n, GridWeight kind) {
    switch (kind) {
        case GridWeight::w0: return weight_w0(e, n);
        case GridWeight::w: return weight_w(e, n);
        case GridWeight::unit: return 1;
    }
    throw InternalError("unreachable weight kind");
}

using GridPath = std::vector<GridVertex>;

// a + b*n^4 (+ marked_count*n^8) split of a path weight; b is the hop count
// and a the signed column residue contributed by vertical edges.
struct PathWeight {
    std::int64_t a = 0;
    int b = 0;
    int marked_count = 0;
    std::int64_t total = 0;  // a + b*n^4 + marked_count*n^8

    std::int64_t total_w0() const { return a + static_cast<std::int64_t>(b) * n4_; }

    static PathWeight of(const GridGraph& g, const GridPath& path) {
        PathWeight out;
        out.n4_ = pow4(g.side());
        std::int64_t w0_sum = 0;
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            GridEdge e{path[k], path[k + 1], g.edge_marked(path[k], path[k + 1])};
            w0_sum += weight_w0(e, g.side());
            out.marked_count += e.marked ? 1 : 0;
            ++out.b;
        }
        out.a = w0_sum - static_cast<std::int64_t>(out.b) * out.n4_;
        out.total = w0_sum + static_cast<std::int64_t>(out.marked_count) * pow8(g.side());
        return out;
    }

private:
    std::int64_t n4_ = 0;
};

namespace detail {

struct GridSearch {
    std::vector<std::int64_t> dist;
    std::vector<int> parent;
};

inline GridSearch grid_dijkstra(const GridGraph& g, const GridVertex& source, GridWeight kind) {
    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
    GridSearch search;
    search.dist.assign(static_cast<std::size_t>(g.vertex_count()), inf);
    search.parent.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    using Item = std::pair<std::int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    int s = g.index(source);
    search.dist[static_cast<std::size_t>(s)] = 0;
    queue.emplace(0, s);
    while (!queue.empty()) {
        auto [d, v] = queue.top();
        queue.pop();
        if (d != search.dist[static_cast<std::size_t>(v)]) continue;
        for (const auto& [to, marked] : g.out_edges(v)) {
            GridEdge e{g.vertex(v), g.vertex(to), marked};
            std::int64_t nd = d + edge_weight(e, g.side(), kind);
            if (nd < search.dist[static_cast<std::size_t>(to)]) {
                search.dist[static_cast<std::size_t>(to)] = nd;
                search.parent[static_cast<std::size_t>(to)] = v;
                queue.emplace(nd, to);
            }
        }
    }
    return search;
}

}  // namespace detail

// One minimum-weight s->t path under w (or w0 when use_marked is false),
// with its weight decomposition; empty when t is unreachable.
inline std::optional<std::pair<GridPath, PathWeight>> min_weight_path(const GridGraph& g,
                                                                      const GridVertex& s,
                                                                      const GridVertex& t,
                                                                      bool use_marked = true) {
    auto search = detail::grid_dijkstra(g, s, use_marked ? GridWeight::w : GridWeight::w0);
    int ti = g.index(t);
    if (search.dist[static_cast<std::size_t>(ti)] == std::numeric_limits<std::int64_t>::max())
        return std::nullopt;
    GridPath path;
    for (int v = ti; v >= 0; v = search.parent[static_cast<std::size_t>(v)])
        path.push_back(g.vertex(v));
    std::reverse(path.begin(), path.end());
    return std::make_pair(path, PathWeight::of(g, path));
}

inline constexpr int simple_path_vertex_guard = 20;

// Every simple directed s->t path; [s] alone when s == t.
inline std::vector<GridPath> enumerate_simple_paths(const GridGraph& g, const GridVertex& s,
                                                    const GridVertex& t) {
    if (g.vertex_count() > simple_path_vertex_guard)
        throw SizeError("path enumeration capped at " +
                        std::to_string(simple_path_vertex_guard) + " vertices");
    std::vector<GridPath> out;
    std::vector<bool> on_path(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<int> current;
    int target = g.index(t);
    auto rec = [&](auto&& self, int v) -> void {
        current.push_back(v);
        on_path[static_cast<std::size_t>(v)] = true;
        if (v == target) {
            GridPath path;
            path.reserve(current.size());
            for (int idx : current) path.push_back(g.vertex(idx));
            out.push_back(std::move(path));
        } else {
            for (const auto& [to, _] : g.out_edges(v))
                if (!on_path[static_cast<std::size_t>(to)]) self(self, to);
        }
        on_path[static_cast<std::size_t>(v)] = false;
        current.pop_back();
    };
    rec(rec, g.index(s));
    return out;
}

struct UniquenessCertificate {
    GridVertex s;
    GridVertex t;
    GridPath first;
    GridPath second;
    std::int64_t total = 0;
    std::string regime;  // which check failed: "w", "w0", "unit", "decomposition"
};

struct UniquenessReport {
    bool unique = true;
    std::optional<UniquenessCertificate> counterexample;
};

// Checks, for every ordered vertex pair, that the minimum weight over all
// simple paths is reached by exactly one path, and that equal w0 totals only
// ever occur with equal (a, b).  By design non-minimal ties are legal: on the
// full 3x3 grid the corner-to-corner paths ESSE and SEES share a total, but
// no weight function here ever lets two paths tie at the minimum.
inline UniquenessReport verify_unique_min_weight(const GridGraph& g,
                                                 GridWeight kind = GridWeight::w) {
    UniquenessReport report;
    int n = g.vertex_count();
    for (int si = 0; si < n && report.unique; ++si) {
        for (int ti = 0; ti < n && report.unique; ++ti) {
            if (si == ti) continue;
            GridVertex s = g.vertex(si);
            GridVertex t = g.vertex(ti);
            auto paths = enumerate_simple_paths(g, s, t);
            if (paths.size() < 2) continue;

            std::vector<PathWeight> weights;
            weights.reserve(paths.size());
            for (const auto& p : paths) weights.push_back(PathWeight::of(g, p));

            auto kind_total = [&](std::size_t k) {
                switch (kind) {
                    case GridWeight::w: return weights[k].total;
                    case GridWeight::w0: return weights[k].total_w0();
                    case GridWeight::unit: return static_cast<std::int64_t>(weights[k].b);
                }
                throw InternalError("unreachable weight kind");
            };

            auto flag = [&](std::size_t x, std::size_t y, std::int64_t total, const char* regime) {
                report.unique = false;
                report.counterexample =
                    UniquenessCertificate{s, t, paths[x], paths[y], total, regime};
            };

            std::size_t best = 0;
            for (std::size_t k = 1; k < paths.size(); ++k)
                if (kind_total(k) < kind_total(best)) best = k;
            for (std::size_t k = 0; k < paths.size() && report.unique; ++k)
                if (k != best && kind_total(k) == kind_total(best))
                    flag(best, k, kind_total(best),
                         kind == GridWeight::w ? "w" : (kind == GridWeight::w0 ? "w0" : "unit"));
            if (!report.unique) break;

            if (kind == GridWeight::w) {
                // the marked term never disturbs w0 minima, check those too
                std::size_t best0 = 0;
                for (std::size_t k = 1; k < paths.size(); ++k)
                    if (weights[k].total_w0() < weights[best0].total_w0()) best0 = k;
                for (std::size_t k = 0; k < paths.size() && report.unique; ++k)
                    if (k != best0 && weights[k].total_w0() == weights[best0].total_w0())
                        flag(best0, k, weights[best0].total_w0(), "w0");
            }
            if (!report.unique) break;

            if (kind != GridWeight::unit) {
                for (std::size_t x = 0; x < paths.size() && report.unique; ++x)
                    for (std::size_t y = x + 1; y < paths.size(); ++y)
                        if (weights[x].total_w0() == weights[y].total_w0() &&
                            (weights[x].a != weights[y].a || weights[x].b != weights[y].b)) {
                            flag(x, y, weights[x].total_w0(), "decomposition");
                            break;
                        }
            }
        }
    }
    return report;
}

// Marked-edge count along the w-minimum path; the n^8 term makes this the
// minimum marked count over all s->t paths.
inline std::optional<int> marked_distance(const GridGraph& g, const GridVertex& s,
                                          const GridVertex& t) {
    auto found = min_weight_path(g, s, t, true);
    if (!found) return std::nullopt;
    return found->second.marked_count;
}

// Number of distinct minimum-weight s->v paths per vertex (0 = unreachable).
// Unambiguity means every entry is at most 1 under the w weights.
inline std::vector<std::uint64_t> count_min_weight_paths(const GridGraph& g, const GridVertex& s,
                                                         GridWeight kind = GridWeight::w) {
    auto search = detail::grid_dijkstra(g, s, kind);
    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
    int n = g.vertex_count();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        if (search.dist[static_cast<std::size_t>(v)] < inf) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return search.dist[static_cast<std::size_t>(x)] < search.dist[static_cast<std::size_t>(y)];
    });
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
    counts[static_cast<std::size_t>(g.index(s))] = 1;
    for (int v : order) {
        if (counts[static_cast<std::size_t>(v)] == 0) continue;
        for (const auto& [to, marked] : g.out_edges(v)) {
            GridEdge e{g.vertex(v), g.vertex(to), marked};
            if (search.dist[static_cast<std::size_t>(v)] + edge_weight(e, g.side(), kind) ==
                search.dist[static_cast<std::size_t>(to)])
                counts[static_cast<std::size_t>(to)] += counts[static_cast<std::size_t>(v)];
        }
    }
    return counts;
}

struct InductiveCountRow {
    std::int64_t weight_bound = 0;  // k
    int vertices_within = 0;        // c_k
    std::int64_t distance_sum = 0;  // D_k

    friend constexpr auto operator<=>(const InductiveCountRow&, const InductiveCountRow&) = default;
};

// The inductive counting table: for every realized shortest-path weight k,
// how many vertices lie within weight k of s and the sum of their distances.
// Requires unique minimum weight paths and reports the offending vertex when
// that fails.
inline std::vector<InductiveCountRow> inductive_count(const GridGraph& g, const GridVertex& s) {
    auto counts = count_min_weight_paths(g, s, GridWeight::w);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (counts[static_cast<std::size_t>(v)] > 1)
            throw InternalError("minimum weight path not unique at vertex " +
                                g.vertex(v).to_string());
    auto search = detail::grid_dijkstra(g, s, GridWeight::w);
    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> reached;
    for (std::int64_t d : search.dist)
        if (d < inf) reached.push_back(d);
    std::sort(reached.begin(), reached.end());
    std::vector<InductiveCountRow> rows;
    std::int64_t running_sum = 0;
    for (std::size_t k = 0; k < reached.size(); ++k) {
        running_sum += reached[k];
        if (k + 1 < reached.size() && reached[k + 1] == reached[k]) continue;
        rows.push_back({reached[k], static_cast<int>(k + 1), running_sum});
    }
    return rows;
}

}  // namespace rotcanon
