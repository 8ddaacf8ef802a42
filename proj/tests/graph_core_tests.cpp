#include <catch2/catch.hpp>

#include <algorithm>
#include <random>

#include "rotcanon/connectivity.hpp"
#include "rotcanon/distance.hpp"
#include "rotcanon/errors.hpp"
#include "rotcanon/graph.hpp"
#include "rotcanon/rotation.hpp"
#include "support/builders.hpp"

using namespace rotcanon;
using namespace testsupport;

namespace {

// independent distance oracle: exhaustive simple-path enumeration
int enumerated_distance(const Graph& g, int s, int t) {
    if (s == t) return 0;
    int best = -1;
    std::vector<bool> on_path(static_cast<std::size_t>(g.vertex_count()), false);
    auto rec = [&](auto&& self, int v, int depth) -> void {
        if (v == t) {
            if (best < 0 || depth < best) best = depth;
            return;
        }
        for (int u : g.neighbors(v)) {
            if (on_path[static_cast<std::size_t>(u)]) continue;
            on_path[static_cast<std::size_t>(u)] = true;
            self(self, u, depth + 1);
            on_path[static_cast<std::size_t>(u)] = false;
        }
    };
    on_path[static_cast<std::size_t>(s)] = true;
    rec(rec, s, 0);
    return best;
}

}  // namespace

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph(0), DomainError);
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(0, 0), DomainError);
    CHECK_THROWS_AS(g.add_edge(1, 0), DomainError);
    CHECK_THROWS_AS(g.add_edge(0, 3), DomainError);
    CHECK(g.edge_count() == 1);
    CHECK(g.neighbors(0) == std::vector<int>{1});
}

TEST_CASE("darts and edges are sorted and complete") {
    Graph g = complete(3);
    auto darts = g.darts();
    CHECK(darts.size() == 6);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(std::is_sorted(darts.begin(), darts.end()));
}

TEST_CASE("bfs distances on K3, a path, and a disconnected pair") {
    Graph k3 = complete(3);
    auto table = bfs_distances(k3, 0);
    CHECK(table.dist == std::vector<int>{0, 1, 1});

    Graph p3 = path(3);
    CHECK(bfs_distances(p3, 0).dist == std::vector<int>{0, 1, 2});

    Graph isolated(2);
    auto iso_table = bfs_distances(isolated, 0);
    CHECK(iso_table.at(0) == 0);
    CHECK_FALSE(iso_table.reachable(1));

    CHECK_THROWS_AS(bfs_distances(k3, 5), DomainError);
}

TEST_CASE("bfs distances agree with exhaustive path enumeration") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 30; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 8)(rng);
        Graph g = random_connected(n, std::uniform_int_distribution<int>(0, n)(rng), rng);
        auto table = bfs_distances(g, 0);
        for (int v = 0; v < n; ++v) CHECK(table.at(v) == enumerated_distance(g, 0, v));
        for (auto [u, v] : g.edges())
            CHECK(std::abs(table.at(u) - table.at(v)) <= 1);
    }
}

TEST_CASE("connectivity levels of the named examples") {
    CHECK(connectivity_level(complete(4)) == 3);
    CHECK(connectivity_level(cycle(4)) == 2);
    CHECK(connectivity_level(path(3)) == 1);
    Graph two(2);
    CHECK(connectivity_level(two) == 0);  // disconnected
    Graph one(1);
    CHECK(connectivity_level(one) == 0);
    for (int n = 4; n <= 7; ++n) CHECK(connectivity_level(complete(n)) == 3);
    CHECK(connectivity_level(star(3)) == 1);
    CHECK(connectivity_level(spider({1, 2, 3})) == 1);
}

TEST_CASE("connected components") {
    Graph g(5);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 2});
    CHECK(comps[1] == std::vector<int>{1});
    CHECK(comps[2] == std::vector<int>{3, 4});
}

TEST_CASE("rotation fans validate and normalize") {
    CHECK_THROWS_AS(RotationScheme({{1, 2, 1}}), DomainError);
    RotationScheme r({{2, 0, 1}});  // normalizes to anchor 0
    CHECK(r.fan(0) == std::vector<int>{0, 1, 2});
    CHECK(r.successor({0, 2}) == Dart{0, 0});
    CHECK_THROWS_AS(r.successor({0, 7}), DomainError);
}

TEST_CASE("oriented graph requires matching fans") {
    Graph g = path(3);
    CHECK_THROWS_AS(OrientedGraph(g, RotationScheme({{1}, {0}, {1}})), DomainError);
    OrientedGraph ok(g, RotationScheme({{1}, {0, 2}, {1}}));
    CHECK(ok.rotation().fan(1) == std::vector<int>{0, 2});
}

TEST_CASE("invert_rotation on the named examples") {
    // degree-1 fan is a fixed point
    RotationScheme leaf({{1}, {0}});
    CHECK(invert_rotation(leaf) == leaf);

    // a 3-cycle inverts to the opposite cycle
    RotationScheme fan({{1, 2, 3}, {0}, {0}, {0}});
    RotationScheme expected({{1, 3, 2}, {0}, {0}, {0}});
    CHECK(invert_rotation(fan) == expected);

    // K3 has only degree-2 fans, which are self-inverse
    OrientedGraph k3 = with_sorted_rotation(complete(3));
    CHECK(invert_rotation(k3.rotation()) == k3.rotation());
}

TEST_CASE("invert_rotation is an involution and inverts successor") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected(std::uniform_int_distribution<int>(2, 8)(rng), 3, rng);
        OrientedGraph og = with_random_rotation(g, rng);
        RotationScheme inv = invert_rotation(og.rotation());
        CHECK(invert_rotation(inv) == og.rotation());
        for (const Dart& d : g.darts()) {
            CHECK(inv.successor(og.rotation().successor(d)) == d);
            CHECK(og.rotation().predecessor(d) == inv.successor(d));
        }
    }
}

TEST_CASE("rotation orbit covers each fan exactly") {
    std::mt19937 rng(11);
    Graph g = random_connected(7, 5, rng);
    OrientedGraph og = with_random_rotation(g, rng);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) continue;
        Dart start{v, g.neighbors(v).front()};
        Dart d = start;
        std::vector<int> seen;
        do {
            seen.push_back(d.head);
            d = og.rotation().successor(d);
        } while (d != start);
        std::sort(seen.begin(), seen.end());
        CHECK(seen == g.neighbors(v));
    }
}

TEST_CASE("apply_permutation preserves structure") {
    std::mt19937 rng(3);
    Graph g = wheel(4);
    auto perm = random_permutation(g.vertex_count(), rng);
    Graph h = apply_permutation(g, perm);
    CHECK(h.edge_count() == g.edge_count());
    for (auto [u, v] : g.edges()) CHECK(h.has_edge(perm[u], perm[v]));

    OrientedGraph og = with_sorted_rotation(g);
    OrientedGraph oh = apply_permutation(og, perm);
    for (const Dart& d : g.darts()) {
        Dart succ = og.rotation().successor(d);
        CHECK(oh.rotation().successor({perm[d.tail], perm[d.head]}) ==
              Dart{perm[succ.tail], perm[succ.head]});
    }
}
