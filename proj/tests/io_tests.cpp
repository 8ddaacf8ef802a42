#include <catch2/catch.hpp>

#include <random>

#include "rotcanon/errors.hpp"
#include "rotcanon/gadgets.hpp"
#include "rotcanon/io.hpp"
#include "support/builders.hpp"

using namespace rotcanon;
using namespace testsupport;

TEST_CASE("parsing the K3 example") {
    GraphDoc doc = parse_graph_file(
        "graph k3\nvertex a\nvertex b\nvertex c\nedge a b\nedge b c\nedge a c\n");
    CHECK(doc.name == "k3");
    CHECK(doc.graph.vertex_count() == 3);
    CHECK(doc.graph.edge_count() == 3);
    CHECK_FALSE(doc.rotation.has_value());
    CHECK(doc.graph.has_edge(doc.id_of("a"), doc.id_of("c")));
}

TEST_CASE("parsing an oriented K3") {
    GraphDoc doc = parse_graph_file(
        "graph k3\nvertex a\nvertex b\nvertex c\n"
        "edge a b\nedge b c\nedge a c\n"
        "rot a b c\nrot b a c\nrot c a b\n");
    REQUIRE(doc.rotation.has_value());
    OrientedGraph og = doc.oriented();
    CHECK(og.rotation().fan(doc.id_of("a")).size() == 2);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_graph_file("graph g\nvertex a\nedge a d\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_graph_file("graph g\nvertex a\nvertex a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_file("graph g\nvertex a\nvertex b\nedge a b\nedge b a\n"),
                    ParseError);  // duplicate edge
    CHECK_THROWS_AS(parse_graph_file("vertex a\n"), ParseError);  // header missing
    CHECK_THROWS_AS(parse_graph_file("graph g\nvertex a\nbogus a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_file("graph g\n"), ParseError);  // no vertices
}

TEST_CASE("malformed rotation blocks") {
    // fan repeats a neighbor
    CHECK_THROWS_AS(
        parse_graph_file("graph g\nvertex a\nvertex b\nedge a b\nrot a b b\nrot b a\n"),
        ParseError);
    // fan does not match the neighborhood
    CHECK_THROWS_AS(
        parse_graph_file(
            "graph g\nvertex a\nvertex b\nvertex c\nedge a b\nrot a b\nrot b a c\nrot c b\n"),
        ParseError);
    // block present but a vertex with edges has no fan
    CHECK_THROWS_AS(
        parse_graph_file("graph g\nvertex a\nvertex b\nvertex c\nedge a b\nedge b c\n"
                         "rot a b\nrot b a c\n"),
        ParseError);
}

TEST_CASE("round trip through serialize and parse") {
    std::string text =
        "graph star\nvertex a\nvertex b\nvertex c\nvertex s\n"
        "edge a s\nedge b s\nedge c s\n"
        "rot s a b c\nrot a s\nrot b s\nrot c s\n";
    GraphDoc doc = parse_graph_file(text);
    std::string out = serialize_graph(doc);
    GraphDoc again = parse_graph_file(out);
    CHECK(serialize_graph(again) == out);

    // the cyclic fan survives: successor of (s, a) is (s, b) in both
    OrientedGraph og = doc.oriented();
    OrientedGraph og2 = again.oriented();
    int s1 = doc.id_of("s"), a1 = doc.id_of("a");
    int s2 = again.id_of("s"), a2 = again.id_of("a");
    CHECK(doc.vertex_names[static_cast<std::size_t>(og.rotation().successor({s1, a1}).head)] ==
          again.vertex_names[static_cast<std::size_t>(og2.rotation().successor({s2, a2}).head)]);
}

TEST_CASE("single vertex serializes to a two-line document") {
    GraphDocBuilder builder("lonely");
    builder.add_vertex("v");
    CHECK(serialize_graph(builder.finalize()) == "graph lonely\nvertex v\n");
}

TEST_CASE("comments and blank lines are skipped") {
    GraphDoc doc = parse_graph_file("# heading\n\ngraph g # trailing\nvertex a\n");
    CHECK(doc.name == "g");
    CHECK(doc.graph.vertex_count() == 1);
}

TEST_CASE("serialization is canonical under vertex declaration order") {
    GraphDoc one = parse_graph_file("graph g\nvertex b\nvertex a\nedge b a\n");
    GraphDoc two = parse_graph_file("graph g\nvertex a\nvertex b\nedge a b\n");
    CHECK(serialize_graph(one) == serialize_graph(two));
}

TEST_CASE("gadget documents round trip") {
    for (GadgetFamily family :
         {GadgetFamily::tree, GadgetFamily::oriented_tree, GadgetFamily::planar3}) {
        GadgetPair pair = build_gadgets({4, 2, 3}, family);
        for (const GraphDoc* doc : {&pair.first, &pair.second}) {
            std::string text = serialize_graph(*doc);
            CHECK(serialize_graph(parse_graph_file(text)) == text);
        }
    }
}

TEST_CASE("grid files round trip") {
    GridGraph g(2, 3, 4);
    g.add_edge({0, 0}, {0, 1}, true);
    g.add_edge({0, 1}, {1, 1});
    g.add_edge({1, 1}, {0, 1});
    std::string text = serialize_grid(g);
    GridGraph again = parse_grid_file(text);
    CHECK(serialize_grid(again) == text);
    CHECK(again.side() == 4);
    CHECK(again.edge_marked({0, 0}, {0, 1}));
    CHECK_FALSE(again.edge_marked({0, 1}, {1, 1}));
}

TEST_CASE("grid parse errors") {
    CHECK_THROWS_AS(parse_grid_file("gedge 0 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_grid_file("grid 2 2 2\ngedge 0 0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_grid_file("grid 2 2 2\ngedge 0 0 0 1 shiny\n"), ParseError);
    CHECK_THROWS_AS(parse_grid_file("grid 2 x 2\n"), ParseError);
}

TEST_CASE("dot export shape") {
    GraphDoc doc = parse_graph_file(
        "graph k3\nvertex a\nvertex b\nvertex c\nedge a b\nedge b c\nedge a c\n"
        "rot a b c\nrot b a c\nrot c a b\n");
    std::string dot = dot_export(doc);
    CHECK(dot.find("graph k3 {") == 0);
    CHECK(dot.find("\"a\" [rot=\"b c\"];") != std::string::npos);
    CHECK(dot.find("\"a\" -- \"b\";") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
    // each undirected edge appears once
    CHECK(dot.find("\"b\" -- \"a\"") == std::string::npos);
}
