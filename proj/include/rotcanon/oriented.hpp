#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "rotcanon/canon.hpp"
#include "rotcanon/connectivity.hpp"
#include "rotcanon/errors.hpp"
#include "rotcanon/isomorphism.hpp"
#include "rotcanon/rotation.hpp"

namespace rotcanon {

// Oriented (rotation-respecting) canonical forms and isomorphism.  Unlike the
// planar 3-connected case the given rotation is part of the object, so the
// inverse scheme is never tried unless the caller asks for reflections.

namespace detail {

struct OrientedComponent {
    std::vector<int> vertices;       // original ids, ascending
    CanonicalCode best_code;         // min over the component's darts
    std::vector<int> rank_of_local;  // first-occurrence ranks for the minimizing list
};

// The sub-oriented-graph induced by a component, vertices renumbered by rank
// inside `vertices`.
inline OrientedGraph induced_oriented(const OrientedGraph& og, const std::vector<int>& vertices) {
    std::vector<int> local(static_cast<std::size_t>(og.graph().vertex_count()), -1);
    for (std::size_t k = 0; k < vertices.size(); ++k)
        local[static_cast<std::size_t>(vertices[k])] = static_cast<int>(k);
    Graph g(static_cast<int>(vertices.size()));
    std::vector<std::vector<int>> fans(vertices.size());
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        int v = vertices[k];
        for (int u : og.graph().neighbors(v))
            if (v < u) g.add_edge(static_cast<int>(k), local[static_cast<std::size_t>(u)]);
        for (int u : og.rotation().fan(v))
            fans[k].push_back(local[static_cast<std::size_t>(u)]);
    }
    return {std::move(g), RotationScheme(std::move(fans))};
}

inline OrientedComponent component_form(const OrientedGraph& og, std::vector<int> vertices) {
    OrientedComponent out;
    out.vertices = std::move(vertices);
    OrientedGraph sub = induced_oriented(og, out.vertices);
    if (sub.graph().edge_count() == 0) {
        out.rank_of_local.assign(1, 1);
        return out;  // a lone vertex carries the empty code
    }
    std::optional<detail::CodeWithList> best;
    for (const Dart& d : sub.graph().darts()) {
        auto probe = detail::code_with_list(sub, d);
        if (!best || probe.code < best->code) best = std::move(probe);
    }
    out.best_code = best->code;
    out.rank_of_local = first_occurrence_ranks(best->list, sub.graph().vertex_count());
    return out;
}

inline std::vector<OrientedComponent> component_forms(const OrientedGraph& og) {
    std::vector<OrientedComponent> out;
    for (auto& comp : connected_components(og.graph()))
        out.push_back(component_form(og, std::move(comp)));
    std::sort(out.begin(), out.end(),
              [](const OrientedComponent& a, const OrientedComponent& b) {
                  return a.best_code < b.best_code;
              });
    return out;
}

}  // namespace detail

// Per component, the minimum code over that component's darts under the given
// rotation only; the component codes are sorted lexicographically.
inline std::vector<CanonicalCode> oriented_canonical_form(const OrientedGraph& og) {
    std::vector<CanonicalCode> out;
    for (auto& comp : detail::component_forms(og)) out.push_back(std::move(comp.best_code));
    return out;
}

namespace detail {

inline std::optional<Isomorphism> oriented_iso_strict(const OrientedGraph& g,
                                                      const OrientedGraph& h) {
    if (g.graph().vertex_count() != h.graph().vertex_count() ||
        g.graph().edge_count() != h.graph().edge_count())
        return std::nullopt;
    auto gc = component_forms(g);
    auto hc = component_forms(h);
    if (gc.size() != hc.size()) return std::nullopt;
    Isomorphism iso;
    iso.map.assign(static_cast<std::size_t>(g.graph().vertex_count()), -1);
    for (std::size_t k = 0; k < gc.size(); ++k) {
        if (gc[k].best_code != hc[k].best_code) return std::nullopt;
        if (gc[k].vertices.size() != hc[k].vertices.size()) return std::nullopt;
        std::vector<int> h_by_rank(hc[k].vertices.size() + 1, -1);
        for (std::size_t v = 0; v < hc[k].vertices.size(); ++v)
            h_by_rank[static_cast<std::size_t>(hc[k].rank_of_local[v])] = hc[k].vertices[v];
        for (std::size_t v = 0; v < gc[k].vertices.size(); ++v)
            iso.map[static_cast<std::size_t>(gc[k].vertices[v])] =
                h_by_rank[static_cast<std::size_t>(gc[k].rank_of_local[v])];
    }
    if (!is_oriented_isomorphism(g, h, iso))
        throw InternalError("matching oriented codes produced an invalid bijection");
    return iso;
}

}  // namespace detail

// Rotation-respecting isomorphism; with allow_reflection the mirror image of
// h (its inverse rotation) is also tried, so mirror-equivalent inputs match.
inline std::optional<Isomorphism> is_isomorphic_oriented(const OrientedGraph& g,
                                                         const OrientedGraph& h,
                                                         bool allow_reflection = false) {
    if (auto iso = detail::oriented_iso_strict(g, h)) return iso;
    if (allow_reflection) {
        OrientedGraph flipped = mirrored(h);
        if (auto iso = detail::oriented_iso_strict(g, flipped)) return iso;
    }
    return std::nullopt;
}

}  // namespace rotcanon
