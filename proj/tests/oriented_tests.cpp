#include <catch2/catch.hpp>

#include <random>

#include "rotcanon/brute_force.hpp"
#include "rotcanon/canon.hpp"
#include "rotcanon/embedding.hpp"
#include "rotcanon/oriented.hpp"
#include "support/builders.hpp"

using namespace rotcanon;
using namespace testsupport;

namespace {

OrientedGraph star_with_fan(const std::vector<int>& center_fan) {
    Graph g = star(static_cast<int>(center_fan.size()));
    std::vector<std::vector<int>> fans(static_cast<std::size_t>(g.vertex_count()));
    fans[0] = center_fan;
    for (int v = 1; v < g.vertex_count(); ++v) fans[static_cast<std::size_t>(v)] = {0};
    return {g, RotationScheme(std::move(fans))};
}

// legs 1, 2, 3 hanging off center 0; vertices numbered leg by leg
OrientedGraph spider123_with_fan(const std::vector<int>& center_fan) {
    Graph g = spider({1, 2, 3});
    std::vector<std::vector<int>> fans(static_cast<std::size_t>(g.vertex_count()));
    fans[0] = center_fan;
    for (int v = 1; v < g.vertex_count(); ++v) fans[static_cast<std::size_t>(v)] = g.neighbors(v);
    return {g, RotationScheme(std::move(fans))};
}

}  // namespace

TEST_CASE("two disjoint triangles give the same component code twice") {
    Graph g(6);
    for (int base : {0, 3})
        for (int k = 0; k < 3; ++k) g.add_edge(base + k, base + (k + 1) % 3);
    auto forms = oriented_canonical_form(with_sorted_rotation(g));
    REQUIRE(forms.size() == 2);
    CHECK(forms[0] == forms[1]);
    CHECK(forms[0].to_string() == "(1,2) (2,3) (2,1) (1,3) (3,2) (3,1)");
}

TEST_CASE("K3 component code equals its dart code") {
    OrientedGraph k3 = with_sorted_rotation(complete(3));
    auto forms = oriented_canonical_form(k3);
    REQUIRE(forms.size() == 1);
    CHECK(forms[0] == code(k3, {0, 1}));
}

TEST_CASE("an isolated vertex contributes an empty code") {
    Graph g(3);
    g.add_edge(1, 2);
    OrientedGraph og(g, RotationScheme({{}, {2}, {1}}));
    auto forms = oriented_canonical_form(og);
    REQUIRE(forms.size() == 2);
    CHECK(forms[0].pairs.empty());
    CHECK(forms[1].to_string() == "(1,2) (2,1)");
}

TEST_CASE("component codes are sorted lexicographically") {
    Graph g(5);  // an edge and a triangle
    g.add_edge(0, 1);
    for (int k = 0; k < 3; ++k) g.add_edge(2 + k, 2 + (k + 1) % 3);
    auto forms = oriented_canonical_form(with_sorted_rotation(g));
    REQUIRE(forms.size() == 2);
    CHECK(forms[0] < forms[1]);
    CHECK(forms[0].to_string() == "(1,2) (2,1)");  // shorter list sorts first
}

TEST_CASE("K4 with mirrored rotations stays oriented-isomorphic") {
    Graph k4 = complete(4);
    auto rho = find_planar_rotation(k4);
    REQUIRE(rho.has_value());
    OrientedGraph a(k4, *rho);
    OrientedGraph b = mirrored(a);
    auto iso = is_isomorphic_oriented(a, b);
    REQUIRE(iso.has_value());  // K4 has an orientation-reversing automorphism
    CHECK(is_oriented_isomorphism(a, b, *iso));
    auto brute = brute_force_oriented_iso(a, b);
    REQUIRE(brute.has_value());
}

TEST_CASE("star fans related by a leaf swap are oriented-isomorphic") {
    OrientedGraph a = star_with_fan({1, 2, 3});
    OrientedGraph b = star_with_fan({1, 3, 2});
    auto iso = is_isomorphic_oriented(a, b);
    REQUIRE(iso.has_value());
    CHECK(is_oriented_isomorphism(a, b, *iso));
    CHECK(brute_force_oriented_iso(a, b).has_value());
}

TEST_CASE("asymmetric spider fans are not oriented-isomorphic") {
    // legs 1, 2, 3: center neighbors are 1 (leg of length 1), 2 (length 2), 4 (length 3)
    OrientedGraph a = spider123_with_fan({1, 2, 4});
    OrientedGraph b = spider123_with_fan({1, 4, 2});
    CHECK_FALSE(is_isomorphic_oriented(a, b).has_value());
    CHECK_FALSE(brute_force_oriented_iso(a, b).has_value());

    // the two fans are mirror images, so the reflection branch finds a match
    auto reflected = is_isomorphic_oriented(a, b, true);
    REQUIRE(reflected.has_value());
    CHECK(is_oriented_isomorphism(a, mirrored(b), *reflected));
}

TEST_CASE("oriented isomorphism agrees with brute force on random inputs") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 7)(rng);
        Graph g = random_connected(n, std::uniform_int_distribution<int>(0, 3)(rng), rng);
        OrientedGraph a = with_random_rotation(g, rng);
        OrientedGraph b = [&] {
            if (trial % 2 == 0)  // relabeled copy: always isomorphic
                return apply_permutation(a, random_permutation(n, rng));
            return with_random_rotation(g, rng);  // same graph, fresh rotation
        }();
        auto fast = is_isomorphic_oriented(a, b);
        auto slow = brute_force_oriented_iso(a, b);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) CHECK(is_oriented_isomorphism(a, b, *fast));
    }
}

TEST_CASE("oriented isomorphism across disconnected graphs") {
    Graph g(6);  // triangle + edge + isolated vertex
    for (int k = 0; k < 3; ++k) g.add_edge(k, (k + 1) % 3);
    g.add_edge(3, 4);
    OrientedGraph a = with_sorted_rotation(g);
    std::mt19937 rng(59);
    auto perm = random_permutation(6, rng);
    OrientedGraph b = apply_permutation(a, perm);
    auto iso = is_isomorphic_oriented(a, b);
    REQUIRE(iso.has_value());
    CHECK(is_oriented_isomorphism(a, b, *iso));

    // different component multisets
    Graph h(6);  // two paths of three vertices
    h.add_edge(0, 1);
    h.add_edge(1, 2);
    h.add_edge(3, 4);
    h.add_edge(4, 5);
    CHECK_FALSE(is_isomorphic_oriented(a, with_sorted_rotation(h)).has_value());
}

TEST_CASE("brute force oracle basics") {
    CHECK(brute_force_iso(complete(3), complete(3)).has_value());
    CHECK_FALSE(brute_force_iso(complete(3), path(3)).has_value());

    Graph two_triangles(6);
    for (int base : {0, 3})
        for (int k = 0; k < 3; ++k)
            two_triangles.add_edge(base + k, base + (k + 1) % 3);
    CHECK_FALSE(brute_force_iso(cycle(6), two_triangles).has_value());

    CHECK_THROWS_AS(brute_force_iso(Graph(21), Graph(21)), SizeError);
}

TEST_CASE("brute force witnesses validate") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 8)(rng);
        Graph g = random_connected(n, std::uniform_int_distribution<int>(0, 4)(rng), rng);
        Graph h = apply_permutation(g, random_permutation(n, rng));
        auto iso = brute_force_iso(g, h);
        REQUIRE(iso.has_value());
        CHECK(is_graph_isomorphism(g, h, *iso));
    }
}
