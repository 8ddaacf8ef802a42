#pragma once

// The planar 3-connected graph pool used by the acceptance checks: named
// solids, wheels, relabeled copies, and seeded stacked triangulations.

#include <array>
#include <random>
#include <string>
#include <vector>

#include "rotcanon/graph.hpp"
#include "support/builders.hpp"

namespace testsupport {

struct PoolEntry {
    std::string name;
    rotcanon::Graph graph;
};

// Planar 3-tree grown by repeatedly placing a vertex inside a face whose
// corners still have low degree (keeps the rotation search space small).
inline rotcanon::Graph stacked_triangulation(int extra_vertices, unsigned seed) {
    std::mt19937 rng(seed);
    int n = 4;
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    std::vector<std::array<int, 3>> chosen;
    std::vector<int> degree(4, 3);
    for (int step = 0; step < extra_vertices; ++step) {
        std::vector<std::size_t> eligible;
        for (std::size_t f = 0; f < faces.size(); ++f)
            if (degree[static_cast<std::size_t>(faces[f][0])] <= 5 &&
                degree[static_cast<std::size_t>(faces[f][1])] <= 5 &&
                degree[static_cast<std::size_t>(faces[f][2])] <= 5)
                eligible.push_back(f);
        if (eligible.empty())
            for (std::size_t f = 0; f < faces.size(); ++f) eligible.push_back(f);
        std::size_t pick =
            eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(rng)];
        auto face = faces[pick];
        faces.erase(faces.begin() + static_cast<std::ptrdiff_t>(pick));
        int x = n++;
        degree.push_back(3);
        for (int corner : face) ++degree[static_cast<std::size_t>(corner)];
        chosen.push_back(face);
        faces.push_back({face[0], face[1], x});
        faces.push_back({face[0], face[2], x});
        faces.push_back({face[1], face[2], x});
    }
    rotcanon::Graph g = complete(4);
    rotcanon::Graph out(n);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (std::size_t k = 0; k < chosen.size(); ++k)
        for (int corner : chosen[k]) out.add_edge(static_cast<int>(k) + 4, corner);
    return out;
}

inline std::vector<PoolEntry> planar3_pool() {
    std::mt19937 rng(900017);
    std::vector<PoolEntry> pool;
    pool.push_back({"k4", complete(4)});
    pool.push_back({"w4", wheel(4)});
    pool.push_back({"w5", wheel(5)});
    pool.push_back({"w6", wheel(6)});
    pool.push_back({"w7", wheel(7)});
    pool.push_back({"prism3", prism3()});
    pool.push_back({"cube", cube()});
    pool.push_back({"octahedron", octahedron()});
    pool.push_back({"bipyramid3", bipyramid(3)});
    pool.push_back({"bipyramid5", bipyramid(5)});
    pool.push_back({"antiprism4", antiprism4()});
    pool.push_back({"k4_relabeled", apply_permutation(complete(4), random_permutation(4, rng))});
    pool.push_back({"cube_relabeled", apply_permutation(cube(), random_permutation(8, rng))});
    pool.push_back(
        {"prism3_relabeled", apply_permutation(prism3(), random_permutation(6, rng))});
    pool.push_back({"tri5", stacked_triangulation(1, 77)});
    pool.push_back({"tri6_a", stacked_triangulation(2, 101)});
    pool.push_back({"tri6_b", stacked_triangulation(2, 202)});
    pool.push_back({"tri6_c", stacked_triangulation(2, 303)});
    pool.push_back({"tri6_d", stacked_triangulation(2, 404)});
    pool.push_back({"tri7", stacked_triangulation(3, 505)});
    return pool;
}

}  // namespace testsupport
