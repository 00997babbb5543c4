#include <stdexcept>
#include <sstream>

#include "doctest.h"
#include "sumg/graph.hpp"
#include "sumg/induce.hpp"

using namespace sumg;

TEST_CASE("graph construction and invariants") {
    SumGraph g(4, GraphMode::Loopless);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.edge_count() == 2);
    CHECK(g.loop_count() == 0);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);

    SumGraph h(2, GraphMode::WithLoops);
    h.add_edge(0, 0);
    CHECK(h.has_loop(0));
    CHECK(h.degree(0) == 1);
    CHECK(h.loop_count() == 1);
}

TEST_CASE("vertex equivalence on the {2,3,4,6,7} graph") {
    InducedGraph ig = induce(LabelBag::parse_string("2 3 4 6 7"), GraphMode::WithLoops);
    const SumGraph& g = ig.graph;
    // values 2,3,4,6,7 at indices 0..4; 6 and 7 have empty neighborhoods
    CHECK(equivalent(g, 3, 4));
    CHECK(equivalent(g, 2, 2));
    CHECK_FALSE(equivalent(g, 0, 1));
    CHECK_FALSE(equivalent(g, 0, 3));
    CHECK_THROWS_AS(equivalent(g, 0, 9), std::out_of_range);
}

TEST_CASE("clique expansion copies are equivalent") {
    InducedGraph ig = induce(LabelBag::parse_string("2 2 3 3 4 6 7"), GraphMode::Loopless);
    // copies of 2 at indices 0,1; copies of 3 at 2,3
    CHECK(equivalent(ig.graph, 0, 1));
    CHECK(equivalent(ig.graph, 2, 3));
    CHECK_FALSE(equivalent(ig.graph, 0, 2));
}

TEST_CASE("equivalence classes") {
    InducedGraph ig = induce(LabelBag::parse_string("2 3 4 6 7"), GraphMode::WithLoops);
    auto classes = equivalence_classes(ig.graph);
    REQUIRE(classes.size() == 4);
    CHECK(classes[0] == std::vector<Vertex>{0});
    CHECK(classes[1] == std::vector<Vertex>{1});
    CHECK(classes[2] == std::vector<Vertex>{2});
    CHECK(classes[3] == std::vector<Vertex>{3, 4});

    SumGraph edgeless(5, GraphMode::Loopless);
    CHECK(equivalence_classes(edgeless).size() == 1);

    // all vertices of A_39 are pairwise non-equivalent
    CHECK(equivalence_classes(gen_A(39).graph).size() == 39);
}

TEST_CASE("terminals") {
    InducedGraph ig = induce(LabelBag::parse_string("2 3 4 6 7"), GraphMode::WithLoops);
    TerminalSet t = terminals(ig.graph, 0);  // vertex of 2, N = {2,4}
    CHECK(t.proper == std::vector<Vertex>{1, 3, 4});
    CHECK_FALSE(t.improper);
    CHECK(t.total() == 3);

    TerminalSet t4 = terminals(ig.graph, 2);  // vertex of 4, no loop
    CHECK(t4.proper == std::vector<Vertex>{3, 4});
    CHECK(t4.improper);

    SumGraph k1(1, GraphMode::Loopless);
    TerminalSet t1 = terminals(k1, 0);
    CHECK(t1.proper.empty());
    CHECK(t1.improper);

    // |proper| + improper = n - |N(v)|
    for (Vertex v = 0; v < ig.graph.vertex_count(); ++v) {
        TerminalSet ts = terminals(ig.graph, v);
        CHECK(ts.total() == ig.graph.vertex_count() - ig.graph.degree(v));
    }
}

TEST_CASE("A_n terminal structure at small psi values") {
    InducedGraph a39 = gen_A(39);
    for (Label k = 2; k <= 6; ++k) {
        Vertex v = a39.psi.at(k).front();
        TerminalSet t = terminals(a39.graph, v);
        CHECK(static_cast<Label>(t.proper.size()) == k);
    }
}

TEST_CASE("graph file round trip") {
    InducedGraph ig = induce(LabelBag::parse_string("2 3 4 6 7"), GraphMode::WithLoops);
    std::string text = graph_to_string(ig.graph);
    std::istringstream in(text);
    SumGraph back = parse_graph(in);
    CHECK(back == ig.graph);

    std::istringstream bad("3 simple\n0 3\n");
    CHECK_THROWS_AS(parse_graph(bad), std::runtime_error);
    std::istringstream badmode("3 funky\n");
    CHECK_THROWS(parse_graph(badmode));
    std::istringstream comments("# header\n2 simple\n0 1 # edge\n");
    SumGraph c = parse_graph(comments);
    CHECK(c.adjacent(0, 1));
}

TEST_CASE("dot export") {
    InducedGraph ig = induce(LabelBag::parse_string("1 2 3"), GraphMode::Loopless);
    std::string dot = to_dot(ig.graph, ig.labels);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("label=\"3\"") != std::string::npos);
}
