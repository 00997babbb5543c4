#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sumg/labeling.hpp"

namespace sumg {

/// start, start + difference, ..., start + (length-1) * difference.
struct ArithSequence {
    Label start = 0;
    Label difference = 0;
    int length = 0;

    Label last() const { return start + static_cast<Label>(length - 1) * difference; }
    bool contains(Label x) const;
    std::vector<Label> elements() const;
    bool operator==(const ArithSequence& other) const = default;
};

enum class SequenceRole {
    Chain,               // built by following guaranteed edge-numbers upward
    TerminalSingleton,   // uncovered proper-terminal label
    GeneratorSingleton,  // the generator's own label as its improper terminal
};

struct CoverSequence {
    ArithSequence seq;
    SequenceRole role;
    bool operator==(const CoverSequence& other) const = default;
};

/// Decomposition of the distinct labels of a valid labeling into arithmetic
/// sequences whose common difference is the generator's label. Every
/// sequence ends at a terminal label of the generator, and every proper
/// terminal label ends one of the sequences.
struct CoverDescription {
    Label generator_label = 0;
    std::vector<CoverSequence> sequences;
    std::set<Label> terminal_labels;

    std::vector<Label> covered_labels() const;  // union of elements, ascending
    int sequence_count() const { return static_cast<int>(sequences.size()); }
};

/// Deterministic cover construction: chains are grown from the lowest
/// uncovered non-terminal label while the next element stays in the label
/// set; leftover proper-terminal labels become singletons in ascending
/// order; the improper singleton, when the generator has no loop and its
/// label is still uncovered, comes last.
///
/// The labeling must be valid.
CoverDescription build_cover(const Labeling& l, Vertex generator);

/// Threshold test: a pair of generators with t_i and t_j terminals is
/// mergeable once the graph has at least 2*(t_i-1)*(t_j-1) + 3
/// non-equivalent vertices.
bool mergeable(int t_i, int t_j, int non_equiv_count);

struct SharedRun {
    int index1 = 0;  // sequence index within the first cover
    int index2 = 0;
    std::array<Label, 3> smallest_shared{};
};

/// First pair of sequences (cover order) sharing at least three elements.
/// Both covers must describe the same label set.
std::optional<SharedRun> shared_run(const CoverDescription& c1, const CoverDescription& c2);

/// All coprime pairs (j, k) with j <= t1-1 and k <= t2-1; each encodes the
/// candidate relation k*d1 = j*d2 between the two generator labels.
std::vector<std::pair<int, int>> merge_relations(int t1, int t2);

/// Upper bound on the other generator's label when one generator is
/// labeled 1: t2 - 1.
int merge_one_bound(int t2);

/// One sequence per line: `start +dx(len-1) -> last [terminal]`.
std::string cover_to_string(const CoverDescription& c);

}  // namespace sumg
