#pragma once

#include <string>

#include "sumg/graph.hpp"

namespace sumg {

/// Canonical byte encoding of a graph: equal for two graphs iff they are
/// isomorphic (mode and loops respected). Computed by color refinement with
/// individualization backtracking, taking the lexicographically smallest
/// adjacency encoding over the refinement leaves.
///
/// Supported up to kCanonicalMaxVertices vertices and a bounded number of
/// search nodes; either limit being exceeded raises std::length_error
/// rather than returning an unreliable answer.
inline constexpr int kCanonicalMaxVertices = 64;

std::string canonical_form(const SumGraph& g);

/// Both graphs must use the same mode.
bool isomorphic(const SumGraph& g, const SumGraph& h);

}  // namespace sumg
