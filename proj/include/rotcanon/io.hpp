#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rotcanon/document.hpp"
#include "rotcanon/errors.hpp"
#include "rotcanon/grid.hpp"

namespace rotcanon {

// Line-oriented file formats.
//
// Graph files:            Grid files:
//   graph <name>            grid R C N
//   vertex <token>          gedge r1 c1 r2 c2 [marked]
//   edge <u> <v>
//   rot <v> <n1> ... <nk>
//
// '#' starts a comment.  Serialization sorts everything by token so that
// parse/serialize round-trips are byte identical.

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline int parse_int(const std::string& tok, int line_no) {
    try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line_no, "expected an integer, got '" + tok + "'");
    }
}

}  // namespace detail

inline GraphDoc parse_graph_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool saw_header = false;
    GraphDocBuilder builder("");
    std::vector<std::pair<int, std::vector<std::string>>> pending_rots;

    auto rebind = [&](const std::string& name) { builder = GraphDocBuilder(name); };

    while (std::getline(in, line)) {
        ++line_no;
        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        try {
            if (kw == "graph") {
                if (saw_header) throw ParseError(line_no, "second graph header");
                if (toks.size() != 2) throw ParseError(line_no, "graph header needs one name");
                saw_header = true;
                rebind(toks[1]);
            } else if (!saw_header) {
                throw ParseError(line_no, "file must start with a graph header");
            } else if (kw == "vertex") {
                if (toks.size() != 2) throw ParseError(line_no, "vertex line needs one token");
                builder.add_vertex(toks[1]);
            } else if (kw == "edge") {
                if (toks.size() != 3) throw ParseError(line_no, "edge line needs two endpoints");
                builder.add_edge(toks[1], toks[2]);
            } else if (kw == "rot") {
                if (toks.size() < 2) throw ParseError(line_no, "rot line needs a vertex");
                pending_rots.emplace_back(line_no,
                                          std::vector<std::string>(toks.begin() + 1, toks.end()));
            } else {
                throw ParseError(line_no, "unknown keyword '" + kw + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const DomainError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!saw_header) throw ParseError(line_no + 1, "missing graph header");
    for (auto& [rot_line, toks] : pending_rots) {
        try {
            builder.set_fan(toks[0], {toks.begin() + 1, toks.end()});
        } catch (const DomainError& e) {
            throw ParseError(rot_line, e.what());
        }
    }
    try {
        return builder.finalize();
    } catch (const DomainError& e) {
        throw ParseError(line_no + 1, e.what());
    }
}

inline std::string serialize_graph(const GraphDoc& doc) {
    std::vector<int> by_token(doc.vertex_names.size());
    for (std::size_t k = 0; k < by_token.size(); ++k) by_token[k] = static_cast<int>(k);
    std::sort(by_token.begin(), by_token.end(), [&](int a, int b) {
        return doc.vertex_names[static_cast<std::size_t>(a)] <
               doc.vertex_names[static_cast<std::size_t>(b)];
    });

    std::string out = "graph " + doc.name + "\n";
    for (int v : by_token) out += "vertex " + doc.vertex_names[static_cast<std::size_t>(v)] + "\n";

    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [u, v] : doc.graph.edges()) {
        std::string a = doc.vertex_names[static_cast<std::size_t>(u)];
        std::string b = doc.vertex_names[static_cast<std::size_t>(v)];
        if (b < a) std::swap(a, b);
        edges.emplace_back(std::move(a), std::move(b));
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) out += "edge " + a + " " + b + "\n";

    if (doc.rotation) {
        for (int v : by_token) {
            const auto& fan = doc.rotation->fan(v);
            if (fan.empty()) continue;
            // rotate the cycle so the smallest token leads; direction is kept
            std::size_t lead = 0;
            for (std::size_t k = 1; k < fan.size(); ++k)
                if (doc.vertex_names[static_cast<std::size_t>(fan[k])] <
                    doc.vertex_names[static_cast<std::size_t>(fan[lead])])
                    lead = k;
            out += "rot " + doc.vertex_names[static_cast<std::size_t>(v)];
            for (std::size_t k = 0; k < fan.size(); ++k)
                out += " " + doc.vertex_names[static_cast<std::size_t>(
                                 fan[(lead + k) % fan.size()])];
            out += "\n";
        }
    }
    return out;
}

inline GridGraph parse_grid_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::optional<GridGraph> grid;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;
        try {
            if (toks[0] == "grid") {
                if (grid) throw ParseError(line_no, "second grid header");
                if (toks.size() != 4) throw ParseError(line_no, "grid header needs R C N");
                grid.emplace(detail::parse_int(toks[1], line_no),
                             detail::parse_int(toks[2], line_no),
                             detail::parse_int(toks[3], line_no));
            } else if (toks[0] == "gedge") {
                if (!grid) throw ParseError(line_no, "gedge before grid header");
                if (toks.size() != 5 && toks.size() != 6)
                    throw ParseError(line_no, "gedge needs r1 c1 r2 c2 [marked]");
                bool marked = false;
                if (toks.size() == 6) {
                    if (toks[5] != "marked")
                        throw ParseError(line_no, "trailing token must be 'marked'");
                    marked = true;
                }
                grid->add_edge({detail::parse_int(toks[1], line_no),
                                detail::parse_int(toks[2], line_no)},
                               {detail::parse_int(toks[3], line_no),
                                detail::parse_int(toks[4], line_no)},
                               marked);
            } else {
                throw ParseError(line_no, "unknown keyword '" + toks[0] + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const DomainError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!grid) throw ParseError(line_no + 1, "missing grid header");
    return *grid;
}

inline std::string serialize_grid(const GridGraph& g) {
    std::string out = "grid " + std::to_string(g.rows()) + " " + std::to_string(g.cols()) + " " +
                      std::to_string(g.side()) + "\n";
    for (const GridEdge& e : g.edges()) {
        out += "gedge " + std::to_string(e.from.row) + " " + std::to_string(e.from.col) + " " +
               std::to_string(e.to.row) + " " + std::to_string(e.to.col);
        if (e.marked) out += " marked";
        out += "\n";
    }
    return out;
}

// DOT export for eyeballing: undirected edges once, fans as a vertex attribute.
inline std::string dot_export(const GraphDoc& doc) {
    std::vector<int> by_token(doc.vertex_names.size());
    for (std::size_t k = 0; k < by_token.size(); ++k) by_token[k] = static_cast<int>(k);
    std::sort(by_token.begin(), by_token.end(), [&](int a, int b) {
        return doc.vertex_names[static_cast<std::size_t>(a)] <
               doc.vertex_names[static_cast<std::size_t>(b)];
    });

    std::string out = "graph " + doc.name + " {\n";
    for (int v : by_token) {
        out += "  \"" + doc.vertex_names[static_cast<std::size_t>(v)] + "\"";
        if (doc.rotation && !doc.rotation->fan(v).empty()) {
            out += " [rot=\"";
            const auto& fan = doc.rotation->fan(v);
            for (std::size_t k = 0; k < fan.size(); ++k) {
                if (k) out += " ";
                out += doc.vertex_names[static_cast<std::size_t>(fan[k])];
            }
            out += "\"]";
        }
        out += ";\n";
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [u, v] : doc.graph.edges()) {
        std::string a = doc.vertex_names[static_cast<std::size_t>(u)];
        std::string b = doc.vertex_names[static_cast<std::size_t>(v)];
        if (b < a) std::swap(a, b);
        edges.emplace_back(std::move(a), std::move(b));
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) out += "  \"" + a + "\" -- \"" + b + "\";\n";
    out += "}\n";
    return out;
}

}  // namespace rotcanon
