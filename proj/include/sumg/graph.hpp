#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sumg {

using Vertex = int;
using Label = std::int64_t;

enum class GraphMode { WithLoops, Loopless };

const char* to_string(GraphMode mode);
GraphMode parse_mode(const std::string& word);

/// Undirected graph, optionally with self-loops. Immutable once built
/// (construction is add_edge calls; all analysis functions take const refs).
class SumGraph {
public:
    SumGraph(int vertex_count, GraphMode mode);

    int vertex_count() const { return n_; }
    GraphMode mode() const { return mode_; }

    /// Adds the undirected edge uv. u == v adds a loop, which is only
    /// legal in WithLoops mode.
    void add_edge(Vertex u, Vertex v);

    bool adjacent(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u) * n_ + v];
    }
    bool has_loop(Vertex v) const { return adjacent(v, v); }

    /// |N(v)|; v itself is counted when it has a loop.
    int degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;

    int edge_count() const { return edges_; }  // loops excluded
    int loop_count() const { return loops_; }

    bool operator==(const SumGraph& other) const = default;

private:
    void check_vertex(Vertex v) const;

    int n_;
    GraphMode mode_;
    int edges_ = 0;
    int loops_ = 0;
    std::vector<bool> adj_;
};

/// Neighborhood-based vertex equivalence. Loopless mode compares
/// N(u) \ {v} with N(v) \ {u}; WithLoops mode compares N(u) with N(v)
/// exactly, self-adjacency included.
bool equivalent(const SumGraph& g, Vertex u, Vertex v);

/// Partition of the vertices into maximal classes of pairwise equivalent
/// vertices. Verifies on the instance that the relation is transitive.
std::vector<std::vector<Vertex>> equivalence_classes(const SumGraph& g);

struct TerminalSet {
    std::vector<Vertex> proper;  // non-neighbors of v other than v, ascending
    bool improper = false;       // true iff v is not adjacent to itself
    int total() const { return static_cast<int>(proper.size()) + (improper ? 1 : 0); }
};

/// Terminals of a generator vertex: V(G) \ N(v). The generator itself is
/// its improper terminal unless it carries a loop.
TerminalSet terminals(const SumGraph& g, Vertex v);
int terminal_count(const SumGraph& g, Vertex v);

// --- text formats ---------------------------------------------------------
// Graph file: first line "n mode" with mode in {loops, simple}; one "u v"
// pair per following line, u == v encoding a loop. '#' starts a comment.

SumGraph parse_graph(std::istream& in);
SumGraph parse_graph_file(const std::string& path);
void write_graph(std::ostream& out, const SumGraph& g);
std::string graph_to_string(const SumGraph& g);

/// DOT rendering; vertex_labels (when non-empty) are printed inside nodes.
std::string to_dot(const SumGraph& g, const std::vector<Label>& vertex_labels = {});

}  // namespace sumg
