#include <stdexcept>
#include <random>

#include "doctest.h"
#include "sumg/covers.hpp"

using namespace sumg;

TEST_CASE("cover of the {2,3,4,6,7} graph from the vertex of 2") {
    InducedGraph ig = induce(LabelBag::parse_string("2 3 4 6 7"), GraphMode::WithLoops);
    CoverDescription c = build_cover(identity_labeling(ig), 0);
    CHECK(c.generator_label == 2);
    REQUIRE(c.sequence_count() == 3);
    CHECK(c.sequences[0] == CoverSequence{{2, 2, 3}, SequenceRole::Chain});
    CHECK(c.sequences[1] == CoverSequence{{3, 2, 1}, SequenceRole::TerminalSingleton});
    CHECK(c.sequences[2] == CoverSequence{{7, 2, 1}, SequenceRole::TerminalSingleton});
    CHECK(c.terminal_labels == std::set<Label>{3, 6, 7});
}

TEST_CASE("difference-1 cover decomposes into integer intervals") {
    InducedGraph ig = induce(LabelBag::parse_string("1 2 3 5 6 8"), GraphMode::WithLoops);
    CoverDescription c = build_cover(identity_labeling(ig), 0);  // generator labeled 1
    REQUIRE(c.sequence_count() == 3);
    CHECK(c.sequences[0].seq == ArithSequence{1, 1, 3});
    CHECK(c.sequences[1].seq == ArithSequence{5, 1, 2});
    CHECK(c.sequences[2].seq == ArithSequence{8, 1, 1});
    CHECK(c.sequences[2].role == SequenceRole::TerminalSingleton);
}

TEST_CASE("single-vertex cover is the improper singleton") {
    InducedGraph ig = induce(LabelBag::parse_string("5"), GraphMode::Loopless);
    CoverDescription c = build_cover(identity_labeling(ig), 0);
    REQUIRE(c.sequence_count() == 1);
    CHECK(c.sequences[0] == CoverSequence{{5, 5, 1}, SequenceRole::GeneratorSingleton});
}

TEST_CASE("build_cover rejects invalid labelings") {
    InducedGraph ig = induce(LabelBag::parse_string("2 3 4 6 7"), GraphMode::WithLoops);
    Labeling bad(ig.graph, {2, 3, 4, 6, 8});
    CHECK_THROWS_AS(build_cover(bad, 0), std::invalid_argument);
}

TEST_CASE("mergeable threshold") {
    CHECK(mergeable(4, 7, 39));
    CHECK(mergeable(2, 2, 5));
    CHECK_FALSE(mergeable(4, 7, 38));
    CHECK_THROWS_AS(mergeable(0, 2, 5), std::invalid_argument);
}

TEST_CASE("shared runs") {
    InducedGraph ig = induce(LabelBag::parse_string("1 2 3 4 5 6 7 8"), GraphMode::WithLoops);
    Labeling l = identity_labeling(ig);
    CoverDescription c1 = build_cover(l, 0);  // labeled 1: single interval
    CoverDescription c2 = build_cover(l, 1);  // labeled 2: two 2-sequences
    REQUIRE(c1.sequence_count() == 1);
    REQUIRE(c2.sequence_count() == 2);
    CHECK(c2.sequences[0].seq == ArithSequence{1, 2, 4});
    CHECK(c2.sequences[1].seq == ArithSequence{2, 2, 4});

    auto self_run = shared_run(c1, c1);
    REQUIRE(self_run.has_value());
    CHECK(self_run->smallest_shared == std::array<Label, 3>{1, 2, 3});

    auto run = shared_run(c1, c2);
    REQUIRE(run.has_value());
    const ArithSequence& s1 = c1.sequences[run->index1].seq;
    const ArithSequence& s2 = c2.sequences[run->index2].seq;
    for (Label x : run->smallest_shared) {
        CHECK(s1.contains(x));
        CHECK(s2.contains(x));
    }

    InducedGraph other = induce(LabelBag::parse_string("1 2 3"), GraphMode::WithLoops);
    CoverDescription c3 = build_cover(identity_labeling(other), 0);
    CHECK_THROWS_AS(shared_run(c1, c3), std::invalid_argument);
}

TEST_CASE("mergeable generators of A_39 share a run") {
    InducedGraph a39 = gen_A(39);
    Labeling l = identity_labeling(a39);
    Vertex v2 = a39.psi.at(2).front();
    Vertex v3 = a39.psi.at(3).front();
    // the loops at 2 and 3 suppress the improper terminals
    int t2 = terminal_count(a39.graph, v2);
    int t3 = terminal_count(a39.graph, v3);
    CHECK(t2 == 2);
    CHECK(t3 == 3);
    int classes = static_cast<int>(equivalence_classes(a39.graph).size());
    REQUIRE(mergeable(t2, t3, classes));
    CHECK(shared_run(build_cover(l, v2), build_cover(l, v3)).has_value());
}

TEST_CASE("merge relations") {
    using P = std::pair<int, int>;
    CHECK(merge_relations(3, 4) ==
          std::vector<P>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 3}});
    CHECK(merge_relations(2, 2) == std::vector<P>{{1, 1}});
    CHECK(merge_relations(4, 4) ==
          std::vector<P>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}});
}

TEST_CASE("merge_one_bound") {
    CHECK(merge_one_bound(4) == 3);
    CHECK(merge_one_bound(2) == 1);
    CHECK(merge_one_bound(7) == 6);
}

TEST_CASE("cover invariants on random induced labelings") {
    std::mt19937 rng(31);
    for (int round = 0; round < 60; ++round) {
        std::vector<Label> vals;
        int size = 1 + static_cast<int>(rng() % 7);
        for (int i = 0; i < size; ++i) vals.push_back(1 + rng() % 22);
        GraphMode mode = round % 2 ? GraphMode::WithLoops : GraphMode::Loopless;
        InducedGraph ig = induce(LabelBag(vals), mode);
        Labeling l = identity_labeling(ig);
        for (Vertex v = 0; v < ig.graph.vertex_count(); ++v) {
            CoverDescription c = build_cover(l, v);
            CHECK(c.covered_labels() == l.label_set());
            CHECK(c.sequence_count() <= terminal_count(ig.graph, v));
            for (const auto& cs : c.sequences) {
                CHECK(c.terminal_labels.count(cs.seq.last()) == 1);
            }
        }
    }
}

TEST_CASE("cover pretty printer") {
    InducedGraph ig = induce(LabelBag::parse_string("2 3 4 6 7"), GraphMode::WithLoops);
    std::string text = cover_to_string(build_cover(identity_labeling(ig), 0));
    CHECK(text.find("2 +2x2 -> 6 [terminal]") != std::string::npos);
}
