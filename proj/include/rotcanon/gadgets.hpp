#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rotcanon/connectivity.hpp"
#include "rotcanon/document.hpp"
#include "rotcanon/embedding.hpp"
#include "rotcanon/errors.hpp"
#include "rotcanon/graph.hpp"
#include "rotcanon/rotation.hpp"

namespace rotcanon {

// Generators for the Ord reduction families.  Each instance (n, i, j) asks
// whether v_i precedes v_j on a directed line of n vertices; every generator
// emits a labeled pair of graphs that are isomorphic exactly when i < j.

struct OrdInstance {
    int n = 2;
    int i = 1;
    int j = 1;
};

enum class GadgetFamily { tree, planar3, oriented_tree };

inline const char* family_name(GadgetFamily f) {
    switch (f) {
        case GadgetFamily::tree: return "tree";
        case GadgetFamily::planar3: return "planar3";
        case GadgetFamily::oriented_tree: return "oriented-tree";
    }
    throw InternalError("unreachable family");
}

struct GadgetPair {
    GraphDoc first;
    GraphDoc second;
    bool label = false;
    GadgetFamily family = GadgetFamily::tree;
    OrdInstance instance;
};

namespace detail {

inline void check_instance(const OrdInstance& inst) {
    if (inst.n < 2) throw DomainError("Ord instance needs at least two line vertices");
    if (inst.i < 1 || inst.i > inst.n || inst.j < 1 || inst.j > inst.n)
        throw DomainError("Ord indices must lie in [1, n]");
}

inline std::string u_name(int k) { return "u" + std::to_string(k); }
inline std::string w_name(int k) { return "w" + std::to_string(k); }

// The doubled line with the switch at position i: r heads both copies, the
// edge u_i-u_{i+1} is rerouted to w_i-u_{i+1}.  Exactly one vertex (w_i) has
// degree 3; u_i, u_n and w_n are the loose ends.
inline std::vector<std::pair<std::string, std::string>> switched_line_edges(int n, int i) {
    std::vector<std::pair<std::string, std::string>> edges;
    edges.emplace_back("r", u_name(1));
    edges.emplace_back("r", w_name(1));
    for (int k = 1; k < n; ++k) {
        if (k != i) edges.emplace_back(u_name(k), u_name(k + 1));
        edges.emplace_back(w_name(k), w_name(k + 1));
    }
    edges.emplace_back(w_name(i), u_name(i + 1));
    return edges;
}

inline GraphDoc tree_member(const OrdInstance& inst, bool second) {
    GraphDocBuilder builder("ord_tree_n" + std::to_string(inst.n) + "_i" +
                            std::to_string(inst.i) + "_j" + std::to_string(inst.j) +
                            (second ? "_2" : "_1"));
    builder.add_vertex("r");
    for (int k = 1; k <= inst.n; ++k) builder.add_vertex(u_name(k));
    for (int k = 1; k <= inst.n; ++k) builder.add_vertex(w_name(k));
    for (const auto& [a, b] : switched_line_edges(inst.n, inst.i)) builder.add_edge(a, b);
    std::string marker = second ? w_name(inst.j) : u_name(inst.j);
    std::string leaf0 = second ? "y0" : "x0";
    std::string leaf1 = second ? "y1" : "x1";
    builder.add_vertex(leaf0);
    builder.add_vertex(leaf1);
    builder.add_edge(marker, leaf0);
    builder.add_edge(marker, leaf1);
    return builder.finalize();
}

inline GraphDoc fixed_non_isomorphic_tree(bool second) {
    GraphDocBuilder builder(second ? "ord_tree_sink_2" : "ord_tree_sink_1");
    builder.add_vertex("a");
    builder.add_vertex("b");
    builder.add_edge("a", "b");
    if (second) {
        builder.add_vertex("c");
        builder.add_edge("b", "c");
    }
    return builder.finalize();
}

}  // namespace detail

// Tree pair: T plus two marker leaves at u_j versus at w_j.  Isomorphic
// exactly when i < j; the i = n instances map to a fixed non-isomorphic pair.
inline GadgetPair build_trees(const OrdInstance& inst) {
    detail::check_instance(inst);
    GadgetPair pair;
    pair.family = GadgetFamily::tree;
    pair.instance = inst;
    if (inst.i == inst.n) {
        pair.first = detail::fixed_non_isomorphic_tree(false);
        pair.second = detail::fixed_non_isomorphic_tree(true);
        pair.label = false;
        return pair;
    }
    pair.first = detail::tree_member(inst, false);
    pair.second = detail::tree_member(inst, true);
    pair.label = inst.i < inst.j;
    return pair;
}

namespace detail {

// Chain neighbors (toward r first) of the marker vertex in the switched line.
inline std::vector<std::string> marker_chain_neighbors(const OrdInstance& inst, bool second) {
    int j = inst.j;
    std::vector<std::string> out;
    if (second) {
        out.push_back(j == 1 ? "r" : w_name(j - 1));
        if (j < inst.n) out.push_back(w_name(j + 1));
        if (j == inst.i) out.push_back(u_name(inst.i + 1));
    } else {
        if (j <= inst.i)
            out.push_back(j == 1 ? "r" : u_name(j - 1));
        else
            out.push_back(j == inst.i + 1 ? w_name(inst.i) : u_name(j - 1));
        if (j < inst.n && j != inst.i) out.push_back(u_name(j + 1));
    }
    return out;
}

}  // namespace detail

// The tree pair equipped with rotation schemes: around w_i the two members
// use opposite cyclic orders, and the marker leaves interleave with the chain
// so the branch swap extends to a rotation-respecting map exactly when i < j.
inline GadgetPair build_oriented_trees(const OrdInstance& inst) {
    detail::check_instance(inst);
    if (inst.i == inst.n)
        throw DomainError("oriented tree gadgets require i < n");
    GadgetPair base = build_trees(inst);
    GadgetPair pair;
    pair.family = GadgetFamily::oriented_tree;
    pair.instance = inst;
    pair.label = base.label;

    for (int member = 0; member < 2; ++member) {
        bool second = member == 1;
        const GraphDoc& doc = second ? base.second : base.first;
        GraphDocBuilder builder("ord_oriented_tree_n" + std::to_string(inst.n) + "_i" +
                                std::to_string(inst.i) + "_j" + std::to_string(inst.j) +
                                (second ? "_2" : "_1"));
        for (const auto& token : doc.vertex_names) builder.add_vertex(token);
        for (auto [u, v] : doc.graph.edges())
            builder.add_edge(doc.vertex_names[static_cast<std::size_t>(u)],
                             doc.vertex_names[static_cast<std::size_t>(v)]);

        std::string wi = detail::w_name(inst.i);
        std::string wi_prev = inst.i == 1 ? "r" : detail::w_name(inst.i - 1);
        std::string marker = second ? detail::w_name(inst.j) : detail::u_name(inst.j);

        for (std::size_t v = 0; v < doc.vertex_names.size(); ++v) {
            const std::string& token = doc.vertex_names[v];
            std::vector<std::string> fan;
            if (token == marker) {
                auto chain = detail::marker_chain_neighbors(inst, second);
                std::string leaf0 = second ? "y0" : "x0";
                std::string leaf1 = second ? "y1" : "x1";
                fan.push_back(chain[0]);
                fan.push_back(leaf0);
                for (std::size_t k = 1; k < chain.size(); ++k) fan.push_back(chain[k]);
                fan.push_back(leaf1);
            } else if (token == wi) {
                fan = {wi_prev, detail::w_name(inst.i + 1), detail::u_name(inst.i + 1)};
                if (second) std::reverse(fan.begin() + 1, fan.end());
            } else {
                for (int u : doc.graph.neighbors(static_cast<int>(v)))
                    fan.push_back(doc.vertex_names[static_cast<std::size_t>(u)]);
            }
            builder.set_fan(token, fan);
        }
        (second ? pair.second : pair.first) = builder.finalize();
    }
    return pair;
}

namespace detail {

// --- planar 3-connected family -------------------------------------------
//
// The switched line is thickened into three parallel tracks: every degree
// <= 2 vertex becomes a triple joined by rungs, every tree edge becomes
// three rails, loose ends are capped by a triangle edge, and the single
// degree-3 vertex w_i becomes a 3x3 grid patch whose west, east and south
// sides pick up the three incoming roads.  The rotation scheme is read off
// the axis-aligned drawing; caps and markers are inserted face-by-face, so
// planarity is maintained by construction and verified afterwards.

struct Planar3Layout {
    GraphDocBuilder builder;
    std::vector<std::pair<int, int>> coords;  // per vertex id
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, int> angle_override;  // (from, to) -> degrees CCW from east

    explicit Planar3Layout(std::string name) : builder(std::move(name)) {}

    int vertex(const std::string& token, int x, int y) {
        int id = builder.add_vertex(token);
        coords.emplace_back(x, y);
        return id;
    }

    void edge(int a, int b) { edges.emplace_back(a, b); }

    // an edge drawn as a curve: explicit departure angles at both endpoints
    void curved_edge(int a, int b, int angle_at_a, int angle_at_b) {
        edges.emplace_back(a, b);
        angle_override[{a, b}] = angle_at_a;
        angle_override[{b, a}] = angle_at_b;
    }
};

inline std::string triple_name(const std::string& base, int track) {
    return base + "_" + std::to_string(track);
}

inline OrientedGraph base_oriented(const Planar3Layout& layout) {
    Graph g(static_cast<int>(layout.coords.size()));
    for (auto [a, b] : layout.edges) g.add_edge(a, b);
    // departure angle in degrees, counter-clockwise from east
    auto compass = [&](int from, int to) {
        auto it = layout.angle_override.find({from, to});
        if (it != layout.angle_override.end()) return it->second;
        int dx = layout.coords[static_cast<std::size_t>(to)].first -
                 layout.coords[static_cast<std::size_t>(from)].first;
        int dy = layout.coords[static_cast<std::size_t>(to)].second -
                 layout.coords[static_cast<std::size_t>(from)].second;
        if (dx > 0 && dy == 0) return 0;
        if (dx == 0 && dy > 0) return 90;
        if (dx < 0 && dy == 0) return 180;
        if (dx == 0 && dy < 0) return 270;
        throw InternalError("layout edge is not axis aligned");
    };
    std::vector<std::vector<int>> fans(layout.coords.size());
    for (std::size_t v = 0; v < layout.coords.size(); ++v) {
        auto fan = g.neighbors(static_cast<int>(v));
        std::vector<int> keys(fan.size());
        for (std::size_t k = 0; k < fan.size(); ++k)
            keys[k] = compass(static_cast<int>(v), fan[k]);
        std::vector<std::size_t> order(fan.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
        for (std::size_t k : order) fans[v].push_back(fan[k]);
    }
    return {std::move(g), RotationScheme(std::move(fans))};
}

inline GraphDoc planar3_member(const OrdInstance& inst, bool second) {
    int n = inst.n;
    int i = inst.i;
    Planar3Layout layout("ord_planar3_n" + std::to_string(n) + "_i" + std::to_string(i) + "_j" +
                         std::to_string(inst.j) + (second ? "_2" : "_1"));

    // original-vertex coordinates (scaled by 3): r at 0, w chain east,
    // u stem west, the tail u_{i+1}..u_n hanging south of the w_i patch
    std::map<std::string, std::pair<int, int>> spot;
    spot["r"] = {0, 0};
    for (int k = 1; k <= n; ++k) spot[w_name(k)] = {3 * k, 0};
    for (int k = 1; k <= i; ++k) spot[u_name(k)] = {-3 * k, 0};
    for (int k = i + 1; k <= n; ++k) spot[u_name(k)] = {3 * i, -3 * (k - i)};

    // triples for every original vertex except w_i
    std::map<std::string, std::array<int, 3>> triple;
    auto add_triple = [&](const std::string& base, bool vertical_chain) {
        auto [x, y] = spot[base];
        std::array<int, 3> ids{};
        for (int t = 0; t < 3; ++t) {
            int vx = vertical_chain ? x + (t - 1) : x;
            int vy = vertical_chain ? y : y - (t - 1);
            ids[static_cast<std::size_t>(t)] = layout.vertex(triple_name(base, t), vx, vy);
        }
        layout.edge(ids[0], ids[1]);
        layout.edge(ids[1], ids[2]);
        triple[base] = ids;
    };
    add_triple("r", false);
    for (int k = 1; k <= i; ++k) add_triple(u_name(k), false);
    for (int k = i + 1; k <= n; ++k) add_triple(u_name(k), true);
    for (int k = 1; k <= n; ++k)
        if (k != i) add_triple(w_name(k), false);

    // the 3x3 patch replacing w_i: row 0 on top, col 0 west
    std::array<std::array<int, 3>, 3> patch{};
    {
        auto [x, y] = spot[w_name(i)];
        for (int row = 0; row < 3; ++row)
            for (int col = 0; col < 3; ++col)
                patch[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
                    layout.vertex("g_" + std::to_string(row) + std::to_string(col),
                                  x + (col - 1), y + (1 - row));
        for (int row = 0; row < 3; ++row)
            for (int col = 0; col < 3; ++col) {
                if (col + 1 < 3)
                    layout.edge(patch[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)],
                                patch[static_cast<std::size_t>(row)][static_cast<std::size_t>(col + 1)]);
                if (row + 1 < 3)
                    layout.edge(patch[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)],
                                patch[static_cast<std::size_t>(row + 1)][static_cast<std::size_t>(col)]);
            }
    }

    // Three rails per tree edge.  The outgoing roads take over the patch's
    // east column and south row.  The stem road lands on the three corners
    // fixed setwise by the main-diagonal patch reflection: track 0 arcs over
    // the top onto the northeast corner, track 1 into the northwest corner,
    // track 2 straight into the southwest corner.  That reflection exchanges
    // the east and south roads while flipping the stem tracks 0 <-> 2, which
    // is exactly the branch-swap automorphism the family is built around.
    std::string wi = w_name(i);
    for (const auto& [a, b] : switched_line_edges(n, i)) {
        if (a != wi && b != wi) {
            for (int t = 0; t < 3; ++t) layout.edge(triple[a][static_cast<std::size_t>(t)],
                                                    triple[b][static_cast<std::size_t>(t)]);
            continue;
        }
        const std::string& other = a == wi ? b : a;
        auto [ox, oy] = spot[other];
        auto [cx, cy] = spot[wi];
        if (oy == cy && ox < cx) {  // stem road onto the diagonal corners
            layout.curved_edge(triple[other][0], patch[0][2], 45, 135);
            layout.curved_edge(triple[other][1], patch[0][0], 45, 200);
            layout.edge(triple[other][2], patch[2][0]);
        } else if (oy == cy && ox > cx) {  // eastbound road onto the east column
            for (int t = 0; t < 3; ++t)
                layout.edge(triple[other][static_cast<std::size_t>(t)],
                            patch[static_cast<std::size_t>(t)][2]);
        } else {  // southbound road onto the south row
            for (int t = 0; t < 3; ++t)
                layout.edge(triple[other][static_cast<std::size_t>(t)],
                            patch[2][static_cast<std::size_t>(t)]);
        }
    }

    OrientedGraph og = base_oriented(layout);

    // cap the three loose ends, then drop in the marker edge
    for (const std::string& end : {u_name(i), u_name(n), w_name(n)})
        og = add_edge_in_face(og, triple[end][0], triple[end][2]);
    std::string marker = second ? w_name(inst.j) : u_name(inst.j);
    if (inst.j != n)  // j == n markers coincide with the caps already present
        og = add_edge_in_face(og, triple[marker][0], triple[marker][2]);

    if (connectivity_level(og.graph()) != 3)
        throw InternalError("planar3 gadget self-check failed: connectivity_level != 3");
    if (!is_planar_rotation(og))
        throw InternalError("planar3 gadget self-check failed: rotation is not planar");

    GraphDoc doc = layout.builder.finalize();
    doc.graph = og.graph();
    std::vector<std::vector<int>> fans;
    fans.reserve(static_cast<std::size_t>(og.graph().vertex_count()));
    for (int v = 0; v < og.graph().vertex_count(); ++v) fans.push_back(og.rotation().fan(v));
    doc.rotation = RotationScheme(std::move(fans));
    return doc;
}

inline GraphDoc fixed_planar3_member(bool second) {
    GraphDocBuilder builder(second ? "ord_planar3_sink_2" : "ord_planar3_sink_1");
    if (!second) {
        for (const char* v : {"a", "b", "c", "d"}) builder.add_vertex(v);
        const char* names[] = {"a", "b", "c", "d"};
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) builder.add_edge(names[u], names[v]);
    } else {
        // octahedron: poles a, f around the square b c d e
        for (const char* v : {"a", "b", "c", "d", "e", "f"}) builder.add_vertex(v);
        for (const char* v : {"b", "c", "d", "e"}) {
            builder.add_edge("a", v);
            builder.add_edge("f", v);
        }
        builder.add_edge("b", "c");
        builder.add_edge("c", "d");
        builder.add_edge("d", "e");
        builder.add_edge("e", "b");
    }
    GraphDoc doc = builder.finalize();
    auto rotation = find_planar_rotation(doc.graph);
    if (!rotation) throw InternalError("fixed planar3 member has no planar rotation");
    doc.rotation = *rotation;
    return doc;
}

}  // namespace detail

// Planar 3-connected pair: the split construction over the switched line,
// marked by the extra triangle edge at the u_j triple versus the w_j triple.
// Members carry the planar rotation scheme of the construction drawing.
// Degenerate markers are handled explicitly: j == i collides with the w_i
// patch, so the instance maps to a fixed non-isomorphic pair; j == n markers
// coincide with the end caps, leaving an identical (trivially isomorphic)
// pair, which is consistent with its label because i < n forces i < j.
inline GadgetPair build_planar3(const OrdInstance& inst) {
    detail::check_instance(inst);
    if (inst.i == inst.n)
        throw DomainError("planar3 gadgets require i < n");
    GadgetPair pair;
    pair.family = GadgetFamily::planar3;
    pair.instance = inst;
    if (inst.j == inst.i) {
        pair.first = detail::fixed_planar3_member(false);
        pair.second = detail::fixed_planar3_member(true);
        pair.label = false;
        return pair;
    }
    pair.first = detail::planar3_member(inst, false);
    pair.second = detail::planar3_member(inst, true);
    pair.label = inst.i < inst.j;
    return pair;
}

inline GadgetPair build_gadgets(const OrdInstance& inst, GadgetFamily family) {
    switch (family) {
        case GadgetFamily::tree: return build_trees(inst);
        case GadgetFamily::planar3: return build_planar3(inst);
        case GadgetFamily::oriented_tree: return build_oriented_trees(inst);
    }
    throw InternalError("unreachable family");
}

}  // namespace rotcanon
