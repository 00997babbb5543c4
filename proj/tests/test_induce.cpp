#include <stdexcept>
#include <random>

#include "doctest.h"
#include "sumg/induce.hpp"
#include "sumg/labeling.hpp"

using namespace sumg;

TEST_CASE("induce the {2,3,4,6,7} gap graph") {
    InducedGraph ig = induce(LabelBag::parse_string("2 3 4 6 7"), GraphMode::WithLoops);
    const SumGraph& g = ig.graph;
    REQUIRE(g.vertex_count() == 5);
    CHECK(g.adjacent(0, 2));  // 2-4
    CHECK(g.adjacent(1, 2));  // 3-4
    CHECK(g.has_loop(0));
    CHECK(g.has_loop(1));
    CHECK_FALSE(g.has_loop(2));
    CHECK(g.degree(3) == 0);
    CHECK(g.degree(4) == 0);
    CHECK(g.edge_count() == 2);
    CHECK(g.loop_count() == 2);
}

TEST_CASE("induce {1,2,3} loopless") {
    InducedGraph ig = induce(LabelBag::parse_string("1 2 3"), GraphMode::Loopless);
    CHECK(ig.graph.adjacent(0, 1));
    CHECK(ig.graph.edge_count() == 1);
    CHECK(ig.graph.degree(2) == 0);
}

TEST_CASE("induce a multiset") {
    InducedGraph ig = induce(LabelBag::parse_string("2 2 3 3 4 6 7"), GraphMode::Loopless);
    // copies: 2,2 at 0,1; 3,3 at 2,3; 4 at 4; 6 at 5; 7 at 6
    CHECK(ig.graph.adjacent(0, 1));  // 2+2 = 4 in S, distinct copies even loopless
    CHECK(ig.graph.adjacent(2, 3));  // 3+3 = 6
    CHECK(ig.graph.adjacent(0, 4));
    CHECK(ig.graph.adjacent(1, 4));
    CHECK(ig.graph.adjacent(2, 4));
    CHECK(ig.graph.adjacent(3, 4));
    CHECK(ig.graph.edge_count() == 6);
    CHECK(ig.graph.loop_count() == 0);
    CHECK(ig.psi.at(2) == std::vector<Vertex>{0, 1});
    CHECK(ig.psi.at(7) == std::vector<Vertex>{6});
}

TEST_CASE("induce the empty bag") {
    InducedGraph ig = induce(LabelBag{}, GraphMode::WithLoops);
    CHECK(ig.graph.vertex_count() == 0);
}

TEST_CASE("gen_A") {
    CHECK(gen_A(6).bag == LabelBag::parse_string("2 3 4 5 6 8"));
    InducedGraph a7 = gen_A(7);
    CHECK(a7.bag == LabelBag::parse_string("2 3 4 5 6 7 9"));
    for (Vertex v = 0; v < a7.graph.vertex_count(); ++v) {
        bool expect_loop = a7.labels[v] == 2 || a7.labels[v] == 3;
        CHECK(a7.graph.has_loop(v) == expect_loop);
    }
    for (int n = 3; n <= 50; ++n) CHECK(gen_A(n).graph.vertex_count() == n);
    CHECK_THROWS_AS(gen_A(2), std::invalid_argument);
}

TEST_CASE("gen_gap_graph") {
    CHECK(gen_gap_graph(7, 5).bag == LabelBag::parse_string("2 3 4 6 7"));
    CHECK(gen_gap_graph(10, 9).bag == gen_A(8).bag);
    for (int k = 4; k <= 12; ++k) {
        for (int gap = 2; gap <= k; ++gap) {
            CHECK(gen_gap_graph(k, gap).graph.vertex_count() == k - 2);
        }
    }
    CHECK_THROWS_AS(gen_gap_graph(7, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_gap_graph(7, 8), std::invalid_argument);
}

TEST_CASE("expand_cliques") {
    LabelBag s = LabelBag::parse_string("2 3 4 6 7");
    std::map<Label, int> all2{{2, 2}, {3, 2}};
    CHECK(expand_cliques(s, all2) == LabelBag::parse_string("2 2 3 3 4 6 7"));

    LabelBag no_loops = LabelBag::parse_string("4 6 7");  // 8, 12, 14 absent
    CHECK(expand_cliques(no_loops, {}) == no_loops);

    InducedGraph c2a7 = induce(expand_cliques_uniform(gen_A(7).bag, 2), GraphMode::Loopless);
    CHECK(c2a7.graph.vertex_count() == 9);

    CHECK_THROWS_AS(expand_cliques(s, std::map<Label, int>{{2, 2}, {3, 2}, {6, 2}}),
                    std::invalid_argument);                                      // 6 has no loop
    CHECK_THROWS_AS(expand_cliques(s, std::map<Label, int>{{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(expand_cliques(s, std::map<Label, int>{{2, 2}, {3, 1}}), std::invalid_argument);
}

TEST_CASE("clique expansion removes every loop") {
    for (int n = 3; n <= 14; ++n) {
        LabelBag expanded = expand_cliques_uniform(gen_A(n).bag, 2);
        InducedGraph ig = induce(expanded, GraphMode::Loopless);
        for (Vertex v = 0; v < ig.graph.vertex_count(); ++v) {
            // former loops became cliques: twice a label in the bag implies
            // the value has multiplicity >= 2
            if (expanded.contains(2 * ig.labels[v])) {
                CHECK(expanded.multiplicity(ig.labels[v]) >= 2);
            }
        }
    }
}

TEST_CASE("gen_standard") {
    SumGraph c4 = gen_standard(Family::Cycle, 4, 3);
    CHECK(c4.vertex_count() == 7);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.degree(4) == 0);

    SumGraph k4 = gen_standard(Family::Complete, 4, 5);
    CHECK(k4.vertex_count() == 9);
    CHECK(k4.edge_count() == 6);

    SumGraph p2 = gen_standard(Family::Path, 2, 1);
    CHECK(p2.vertex_count() == 3);
    CHECK(p2.edge_count() == 1);

    SumGraph star = gen_standard(Family::Star, 5, 0);
    CHECK(star.degree(0) == 4);
}

TEST_CASE("equal values induce equivalent vertices") {
    std::mt19937 rng(99);
    for (int round = 0; round < 60; ++round) {
        std::vector<Label> vals;
        int size = 1 + static_cast<int>(rng() % 7);
        for (int i = 0; i < size; ++i) vals.push_back(1 + rng() % 20);
        InducedGraph ig =
            induce(LabelBag(vals), round % 2 ? GraphMode::WithLoops : GraphMode::Loopless);
        for (const auto& [value, verts] : ig.psi) {
            for (std::size_t i = 0; i < verts.size(); ++i) {
                for (std::size_t j = i + 1; j < verts.size(); ++j) {
                    CHECK(equivalent(ig.graph, verts[i], verts[j]));
                }
            }
        }
    }
}

TEST_CASE("induced identity labeling is valid in both modes") {
    std::mt19937 rng(123);
    for (int round = 0; round < 40; ++round) {
        std::vector<Label> vals;
        int size = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < size; ++i) vals.push_back(1 + rng() % 25);
        for (GraphMode mode : {GraphMode::WithLoops, GraphMode::Loopless}) {
            InducedGraph ig = induce(LabelBag(vals), mode);
            CHECK(is_valid(identity_labeling(ig)));
        }
    }
}
