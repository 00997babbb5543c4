#pragma once

#include <map>
#include <vector>

#include "sumg/bag.hpp"
#include "sumg/graph.hpp"

namespace sumg {

/// A graph together with the integer multiset that induced it. Vertices are
/// materialized in sorted value order (copies of equal values consecutive),
/// so the value-to-vertex map psi is reproducible.
struct InducedGraph {
    SumGraph graph;
    std::vector<Label> labels;                // vertex -> inducing value
    std::map<Label, std::vector<Vertex>> psi; // value -> vertices it induces
    LabelBag bag;
};

/// Graph induced by a multiset: distinct copies u != v are adjacent iff the
/// sum of their values is in the bag; a vertex loops iff the mode allows
/// loops and twice its value is in the bag.
InducedGraph induce(const LabelBag& bag, GraphMode mode);

/// {2, ..., n} with n+1 skipped and n+2 kept; n vertices, WithLoops.
InducedGraph gen_A(int n);

/// {2, ..., k} minus the gap element; k-2 vertices, WithLoops.
/// Gap values 2 and k are accepted.
InducedGraph gen_gap_graph(int k, int gap);

/// Raises the multiplicity of every loop-carrying value of the bag (those i
/// with 2i in the bag) to the mapped count, so the loopless induced graph
/// replaces each loop with a clique. The map keys must be exactly the
/// loop-carrying values and every count must be at least 2.
LabelBag expand_cliques(const LabelBag& bag, const std::map<Label, int>& multiplicities);

/// expand_cliques with every multiplicity set to k.
LabelBag expand_cliques_uniform(const LabelBag& bag, int k);

enum class Family { Path, Cycle, Complete, Star };

/// Standard loopless constructions plus appended isolated vertices.
/// n counts the family's own vertices (a Star of n vertices has n-1 leaves).
SumGraph gen_standard(Family family, int n, int extra_isolates);

}  // namespace sumg
