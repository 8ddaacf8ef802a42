#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotcanon/brute_force.hpp"
#include "rotcanon/canon.hpp"
#include "rotcanon/document.hpp"
#include "rotcanon/errors.hpp"
#include "rotcanon/gadgets.hpp"
#include "rotcanon/grid.hpp"
#include "rotcanon/io.hpp"
#include "rotcanon/oriented.hpp"

namespace rotcanon::cli {

// Exit codes: 0 success / isomorphic / property holds, 1 non-isomorphic or
// property violated, 2 usage error, 3 precondition failure (bad input, parse
// error, guard exceeded), 4 internal invariant violation.

inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_precondition = 3;
inline constexpr int exit_internal = 4;

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write " + path);
    out << text;
}

inline GraphDoc load_graph(const std::string& path) {
    return parse_graph_file(read_file(path));
}

inline GridVertex parse_grid_vertex(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw DomainError("expected row,col but got '" + text + "'");
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw DomainError("expected row,col but got '" + text + "'");
    }
}

inline void print_mapping(std::ostream& out, const GraphDoc& a, const GraphDoc& b,
                          const Isomorphism& iso) {
    std::vector<int> order(a.vertex_names.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return a.vertex_names[static_cast<std::size_t>(x)] <
               a.vertex_names[static_cast<std::size_t>(y)];
    });
    for (int v : order)
        out << "φ " << a.vertex_names[static_cast<std::size_t>(v)] << " -> "
            << b.vertex_names[static_cast<std::size_t>(iso.map[static_cast<std::size_t>(v)])]
            << "\n";
}

// Planar rotation for the planar3 code path: the file's rotation block when
// present, otherwise exhaustive search.
inline OrientedGraph planar3_input(const GraphDoc& doc, bool trust) {
    if (!trust && connectivity_level(doc.graph) != 3)
        throw DomainError(doc.name + " is not 3-connected");
    if (doc.rotation) {
        OrientedGraph og(doc.graph, *doc.rotation);
        if (!trust && !is_planar_rotation(og))
            throw DomainError(doc.name + " rotation block is not planar");
        return og;
    }
    auto rotation = find_planar_rotation(doc.graph);
    if (!rotation) throw DomainError(doc.name + " has no planar rotation scheme");
    return {doc.graph, *rotation};
}

inline int run_canon(const std::string& path, bool oriented, bool trust, std::ostream& out) {
    GraphDoc doc = load_graph(path);
    if (oriented) {
        for (const CanonicalCode& c : oriented_canonical_form(doc.oriented()))
            out << c.to_string() << "\n";
        return exit_ok;
    }
    out << canonical_form_planar3(planar3_input(doc, trust), true).to_string() << "\n";
    return exit_ok;
}

inline int run_iso(const std::string& path_a, const std::string& path_b, bool oriented,
                   bool allow_reflection, std::ostream& out) {
    GraphDoc a = load_graph(path_a);
    GraphDoc b = load_graph(path_b);
    std::optional<Isomorphism> iso;
    if (oriented) {
        iso = is_isomorphic_oriented(a.oriented(), b.oriented(), allow_reflection);
    } else {
        try {
            iso = is_isomorphic_planar3(planar3_input(a, false), planar3_input(b, false), true);
        } catch (const DomainError&) {
            // outside the planar 3-connected domain: fall back to the exact
            // exhaustive decider (desk-scale inputs only)
            iso = brute_force_iso(a.graph, b.graph);
        }
    }
    if (!iso) {
        out << "non-isomorphic\n";
        return exit_negative;
    }
    out << "isomorphic\n";
    print_mapping(out, a, b, *iso);
    return exit_ok;
}

inline int run_gen(const std::string& kind, int n, int i, int j, const std::string& target,
                   const std::string& prefix, std::ostream& out) {
    if (kind != "ord") throw CLI::ValidationError("gen", "unknown generator '" + kind + "'");
    GadgetFamily family;
    if (target == "tree") family = GadgetFamily::tree;
    else if (target == "planar3") family = GadgetFamily::planar3;
    else if (target == "oriented-tree") family = GadgetFamily::oriented_tree;
    else throw CLI::ValidationError("--target", "must be tree, planar3 or oriented-tree");

    GadgetPair pair = build_gadgets({n, i, j}, family);
    write_file(prefix + "1.graph", serialize_graph(pair.first));
    write_file(prefix + "2.graph", serialize_graph(pair.second));
    std::string manifest = std::string("label ") + (pair.label ? "true" : "false") + " family " +
                           family_name(pair.family) + " n " + std::to_string(n) + " i " +
                           std::to_string(i) + " j " + std::to_string(j) + "\n";
    write_file(prefix + ".manifest", manifest);
    out << manifest;
    return exit_ok;
}

inline int run_grid_verify(int rows, int cols, std::optional<unsigned> seed, double density,
                           std::ostream& out) {
    GridGraph grid = [&] {
        if (!seed) return GridGraph::full(rows, cols);
        std::mt19937 rng(*seed);
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        GridGraph g(rows, cols);
        for (const GridEdge& e : GridGraph::full(rows, cols).edges())
            if (coin(rng) <= density) g.add_edge(e.from, e.to, coin(rng) < 0.25);
        return g;
    }();
    auto report = verify_unique_min_weight(grid);
    if (report.unique) {
        out << "unique minimum weight paths: yes (" << grid.rows() << "x" << grid.cols() << ", "
            << grid.edge_count() << " edges)\n";
        return exit_ok;
    }
    const auto& c = *report.counterexample;
    out << "unique minimum weight paths: NO (" << c.regime << " tie at " << c.total << " between "
        << c.s.to_string() << " and " << c.t.to_string() << ")\n";
    auto print_path = [&](const GridPath& p) {
        for (std::size_t k = 0; k < p.size(); ++k) out << (k ? " " : "  ") << p[k].to_string();
        out << "\n";
    };
    print_path(c.first);
    print_path(c.second);
    return exit_negative;
}

inline int run_grid_dist(const std::string& path, const std::string& from, const std::string& to,
                         std::ostream& out) {
    GridGraph grid = parse_grid_file(read_file(path));
    GridVertex s = parse_grid_vertex(from);
    GridVertex t = parse_grid_vertex(to);
    auto found = min_weight_path(grid, s, t, true);
    if (!found) {
        out << "unreachable\n";
        return exit_ok;
    }
    const auto& [p, weight] = *found;
    out << "total " << weight.total << " a " << weight.a << " b " << weight.b << " marked "
        << weight.marked_count << "\n";
    out << "path";
    for (const GridVertex& v : p) out << " " << v.to_string();
    out << "\n";
    return exit_ok;
}

}  // namespace detail

// The full command surface; returns the process exit code.
inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"canonical codes and isomorphism for graphs with rotation schemes", "rotcanon"};
    app.require_subcommand(1);

    std::string file_a, file_b, target = "tree", prefix, gen_kind, from, to;
    bool oriented = false, trust = false, allow_reflection = false;
    int n = 0, i = 0, j = 0, rows = 0, cols = 0;
    double density = 1.0;
    std::optional<unsigned> seed;

    CLI::App* canon = app.add_subcommand("canon", "print the canonical code of a graph file");
    canon->add_option("file", file_a)->required();
    canon->add_flag("--oriented", oriented, "use the rotation block as-is, per component");
    canon->add_flag("--trust-input", trust, "skip 3-connectivity and planarity checks");

    CLI::App* iso = app.add_subcommand("iso", "decide isomorphism of two graph files");
    iso->add_option("a", file_a)->required();
    iso->add_option("b", file_b)->required();
    iso->add_flag("--oriented", oriented, "respect the rotation blocks");
    iso->add_flag("--allow-reflection", allow_reflection, "also try the mirror rotation of b");

    CLI::App* gen = app.add_subcommand("gen", "generate a labeled gadget pair");
    gen->add_option("kind", gen_kind)->required();
    gen->add_option("--n", n)->required();
    gen->add_option("--i", i)->required();
    gen->add_option("--j", j)->required();
    gen->add_option("--target", target, "tree | planar3 | oriented-tree")->required();
    gen->add_option("--out-prefix", prefix)->required();

    CLI::App* grid = app.add_subcommand("grid", "grid weight function tools");
    grid->require_subcommand(1);
    CLI::App* verify = grid->add_subcommand("verify", "check minimum weight path uniqueness");
    verify->add_option("--rows", rows)->required();
    verify->add_option("--cols", cols)->required();
    verify->add_option("--seed", seed, "random subgrid instead of the full grid");
    verify->add_option("--density", density, "edge keep probability for seeded grids");
    CLI::App* dist = grid->add_subcommand("dist", "minimum weight path between two grid vertices");
    dist->add_option("file", file_a)->required();
    dist->add_option("--from", from)->required();
    dist->add_option("--to", to)->required();

    CLI::App* dot = app.add_subcommand("dot", "write a DOT rendering of a graph file");
    dot->add_option("file", file_a)->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (canon->parsed()) return detail::run_canon(file_a, oriented, trust, out);
        if (iso->parsed()) return detail::run_iso(file_a, file_b, oriented, allow_reflection, out);
        if (gen->parsed()) return detail::run_gen(gen_kind, n, i, j, target, prefix, out);
        if (grid->parsed()) {
            if (verify->parsed()) return detail::run_grid_verify(rows, cols, seed, density, out);
            return detail::run_grid_dist(file_a, from, to, out);
        }
        if (dot->parsed()) {
            out << dot_export(detail::load_graph(file_a));
            return exit_ok;
        }
        err << "no subcommand selected\n";
        return exit_usage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return exit_precondition;
    }
}

}  // namespace rotcanon::cli
