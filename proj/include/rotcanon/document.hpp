#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rotcanon/errors.hpp"
#include "rotcanon/graph.hpp"
#include "rotcanon/rotation.hpp"

namespace rotcanon {

// A graph with human-readable vertex tokens, as read from or written to disk.
// vertex_names[v] is the token of library vertex v.
struct GraphDoc {
    std::string name;
    std::vector<std::string> vertex_names;
    Graph graph{1};
    std::optional<RotationScheme> rotation;

    int id_of(const std::string& token) const {
        auto it = std::find(vertex_names.begin(), vertex_names.end(), token);
        if (it == vertex_names.end()) throw DomainError("unknown vertex token " + token);
        return static_cast<int>(it - vertex_names.begin());
    }

    OrientedGraph oriented() const {
        if (!rotation) throw DomainError("graph document carries no rotation block");
        return {graph, *rotation};
    }
};

// Accumulates named vertices, edges and fans, then freezes them into a
// validated GraphDoc.
class GraphDocBuilder {
public:
    explicit GraphDocBuilder(std::string name) : name_(std::move(name)) {}

    int add_vertex(const std::string& token) {
        if (index_.count(token)) throw DomainError("duplicate vertex " + token);
        int id = static_cast<int>(names_.size());
        index_.emplace(token, id);
        names_.push_back(token);
        return id;
    }

    bool has_vertex(const std::string& token) const { return index_.count(token) > 0; }

    int id_of(const std::string& token) const {
        auto it = index_.find(token);
        if (it == index_.end()) throw DomainError("unknown vertex " + token);
        return it->second;
    }

    void add_edge(const std::string& u, const std::string& v) {
        edges_.emplace_back(id_of(u), id_of(v));
    }

    void set_fan(const std::string& v, const std::vector<std::string>& neighbor_tokens) {
        std::vector<int> fan;
        fan.reserve(neighbor_tokens.size());
        for (const auto& t : neighbor_tokens) fan.push_back(id_of(t));
        if (!fans_) fans_.emplace();
        fans_->emplace_back(id_of(v), std::move(fan));
    }

    bool has_fan(const std::string& v) const {
        if (!fans_) return false;
        int id = id_of(v);
        for (const auto& [vertex, _] : *fans_)
            if (vertex == id) return true;
        return false;
    }

    GraphDoc finalize() const {
        if (names_.empty()) throw DomainError("graph has no vertices");
        GraphDoc doc;
        doc.name = name_;
        doc.vertex_names = names_;
        doc.graph = Graph(static_cast<int>(names_.size()));
        for (auto [u, v] : edges_) doc.graph.add_edge(u, v);
        if (fans_) {
            std::vector<std::vector<int>> table(names_.size());
            std::vector<bool> present(names_.size(), false);
            for (const auto& [v, fan] : *fans_) {
                if (present[static_cast<std::size_t>(v)])
                    throw DomainError("vertex " + names_[static_cast<std::size_t>(v)] +
                                      " has two rotation fans");
                present[static_cast<std::size_t>(v)] = true;
                table[static_cast<std::size_t>(v)] = fan;
            }
            for (std::size_t v = 0; v < names_.size(); ++v)
                if (!present[v] && doc.graph.degree(static_cast<int>(v)) > 0)
                    throw DomainError("rotation block misses vertex " + names_[v]);
            doc.rotation = RotationScheme(std::move(table));
            (void)OrientedGraph(doc.graph, *doc.rotation);  // full coverage validation
        }
        return doc;
    }

private:
    std::string name_;
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<std::pair<int, int>> edges_;
    std::optional<std::vector<std::pair<int, std::vector<int>>>> fans_;
};

}  // namespace rotcanon
