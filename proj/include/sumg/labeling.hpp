#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sumg/graph.hpp"
#include "sumg/induce.hpp"

namespace sumg {

/// Assignment of a positive integer to every vertex of a graph. Not
/// required to be injective and not required to be a valid sum labeling;
/// validate() decides the latter.
class Labeling {
public:
    Labeling(SumGraph graph, std::vector<Label> labels);

    const SumGraph& graph() const { return graph_; }
    const std::vector<Label>& labels() const { return labels_; }
    Label label(Vertex v) const { return labels_.at(v); }
    bool injective() const;

    /// Distinct labels, ascending.
    std::vector<Label> label_set() const;

    bool operator==(const Labeling& other) const = default;

private:
    SumGraph graph_;
    std::vector<Label> labels_;
};

enum class ViolationKind { UnguaranteedEdge, MissingEdge };

struct Violation {
    ViolationKind kind;
    Vertex u;
    Vertex v;            // u <= v; u == v refers to the loop pair
    Label edge_number;   // label(u) + label(v)
    bool operator==(const Violation& other) const = default;
};

/// Exhaustive check of the sum-graph condition in the graph's mode: an edge
/// whose edge-number is not a label yields UnguaranteedEdge, a non-edge
/// whose edge-number is a label yields MissingEdge. Loopless mode never
/// examines the pairs (v, v); WithLoops mode examines all pairs.
std::vector<Violation> validate(const Labeling& l);
bool is_valid(const Labeling& l);

/// Terminals of v; depends only on the underlying graph.
TerminalSet terminals(const Labeling& l, Vertex v);

/// Divides all labels by their gcd. Requires a valid labeling (sum
/// relations are preserved by the division, so the result is valid too).
Labeling normalize(const Labeling& l);

/// True iff some vertex is labeled 1.
bool is_minimal(const Labeling& l);

Labeling scale(const Labeling& l, Label factor);

/// The labeling a bag induces on its own graph.
Labeling identity_labeling(const InducedGraph& ig);

// Labeling file: one integer per vertex line, in the graph file's vertex
// order; '#' comments.
std::vector<Label> parse_labels(std::istream& in);
std::vector<Label> parse_labels_file(const std::string& path);
std::string labels_to_string(const std::vector<Label>& labels);

}  // namespace sumg
