#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>

#include "sumg/induce.hpp"
#include "sumg/labeling.hpp"

namespace sumg {

struct SearchConfig {
    Label max_label = 1000;            // bound B on every label
    bool require_label_one = false;    // only labelings using the label 1
    bool require_injective = false;    // pairwise distinct labels
    std::optional<GraphMode> mode;     // validation semantics; defaults to the graph's
    int max_results = std::numeric_limits<int>::max();
    std::chrono::milliseconds time_budget{60'000};
};

enum class SearchStatus { Found, ExhaustedWithinBound, BudgetExceeded };

const char* to_string(SearchStatus s);

struct SearchOutcome {
    SearchStatus status = SearchStatus::ExhaustedWithinBound;
    std::vector<Labeling> labelings;   // deduplicated by label multiset; gcd-1 unless
                                       // require_label_one pinned the scale already
    std::uint64_t nodes_explored = 0;
    bool complete = false;             // the bounded search tree was fully enumerated
};

/// Bounded-exhaustive search for valid sum labelings with all labels <= B.
/// Complete within the bound: when any labeling satisfying the predicates
/// exists with labels <= B, the status is Found (time budget permitting).
/// Labels are assigned in increasing value; equivalent vertices receive
/// them in fixed member order, which is the only symmetry broken.
SearchOutcome find_labelings(const SumGraph& g, const SearchConfig& cfg);

/// find_labelings with require_label_one and max_results = 1.
/// ExhaustedWithinBound here means: no minimal labeling with labels <= B.
SearchOutcome has_minimal_labeling_bounded(
    const SumGraph& g, Label max_label,
    std::chrono::milliseconds time_budget = std::chrono::milliseconds{60'000});

struct SigmaResult {
    int sigma = 0;
    Labeling witness;            // on the graph extended by sigma isolates
    bool exhaustive_below = false;  // all smaller isolate counts fully exhausted at B
    std::uint64_t nodes_explored = 0;
};

/// Least number of isolated vertices (up to max_isolates) whose addition
/// admits a valid injective labeling with labels <= B. The input graph must
/// be loopless and have no isolated vertices of its own.
std::optional<SigmaResult> sum_number_bounded(
    const SumGraph& g, int max_isolates, Label max_label,
    std::chrono::milliseconds budget_per_count = std::chrono::milliseconds{60'000});

/// Brute-force oracle: streams every bag of the given size with values in
/// [1, max_value] together with its induced graph. Deliberately unpruned;
/// kept small (vertex_count <= 7, max_value <= 30).
void oracle_enumerate(int vertex_count, Label max_value, GraphMode mode,
                      const std::function<bool(const LabelBag&, const InducedGraph&)>& visit);

}  // namespace sumg
