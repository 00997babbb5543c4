#include "sumg/graph.hpp"

#include <algorithm>
#include <istream>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sumg {

const char* to_string(GraphMode mode) {
    return mode == GraphMode::WithLoops ? "loops" : "simple";
}

GraphMode parse_mode(const std::string& word) {
    if (word == "loops") return GraphMode::WithLoops;
    if (word == "simple") return GraphMode::Loopless;
    throw std::invalid_argument("unknown graph mode '" + word + "' (expected 'loops' or 'simple')");
}

SumGraph::SumGraph(int vertex_count, GraphMode mode) : n_(vertex_count), mode_(mode) {
    if (vertex_count < 0) throw std::invalid_argument("vertex_count must be non-negative");
    adj_.assign(static_cast<std::size_t>(n_) * n_, false);
}

void SumGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex index " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
    }
}

void SumGraph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v && mode_ == GraphMode::Loopless) {
        throw std::invalid_argument("loop on vertex " + std::to_string(u) + " in a loopless graph");
    }
    std::size_t a = static_cast<std::size_t>(u) * n_ + v;
    std::size_t b = static_cast<std::size_t>(v) * n_ + u;
    if (adj_[a]) return;
    adj_[a] = true;
    adj_[b] = true;
    if (u == v) {
        ++loops_;
    } else {
        ++edges_;
    }
}

int SumGraph::degree(Vertex v) const {
    check_vertex(v);
    int d = 0;
    for (Vertex w = 0; w < n_; ++w) {
        if (adj_[static_cast<std::size_t>(v) * n_ + w]) ++d;
    }
    return d;
}

std::vector<Vertex> SumGraph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for (Vertex w = 0; w < n_; ++w) {
        if (adj_[static_cast<std::size_t>(v) * n_ + w]) out.push_back(w);
    }
    return out;
}

bool equivalent(const SumGraph& g, Vertex u, Vertex v) {
    const int n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n) {
        throw std::out_of_range("equivalent: vertex index out of range");
    }
    if (u == v) return true;
    if (g.mode() == GraphMode::WithLoops) {
        for (Vertex w = 0; w < n; ++w) {
            if (g.adjacent(u, w) != g.adjacent(v, w)) return false;
        }
        return true;
    }
    for (Vertex w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if (g.adjacent(u, w) != g.adjacent(v, w)) return false;
    }
    return true;
}

std::vector<std::vector<Vertex>> equivalence_classes(const SumGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v = 0; v < n; ++v) {
        bool placed = false;
        for (auto& cls : classes) {
            if (equivalent(g, cls.front(), v)) {
                cls.push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({v});
    }
    // The defining relation is an equivalence relation for both modes; check
    // it held on this instance (pairwise within classes, representatives apart).
    for (const auto& cls : classes) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
            for (std::size_t j = i + 1; j < cls.size(); ++j) {
                if (!equivalent(g, cls[i], cls[j])) {
                    throw std::logic_error("vertex equivalence not transitive on this instance");
                }
            }
        }
    }
    return classes;
}

TerminalSet terminals(const SumGraph& g, Vertex v) {
    TerminalSet t;
    const int n = g.vertex_count();
    for (Vertex w = 0; w < n; ++w) {
        if (g.adjacent(v, w)) continue;
        if (w == v) {
            t.improper = true;
        } else {
            t.proper.push_back(w);
        }
    }
    return t;
}

int terminal_count(const SumGraph& g, Vertex v) { return terminals(g, v).total(); }

namespace {

// Strips comments, returns false on an all-blank line.
bool significant_line(std::string& line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

}  // namespace

SumGraph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    GraphMode mode = GraphMode::Loopless;
    while (std::getline(in, line)) {
        ++lineno;
        if (!significant_line(line)) continue;
        std::istringstream header(line);
        std::string mode_word;
        if (!(header >> n >> mode_word) || n < 0) {
            throw std::runtime_error("graph file line " + std::to_string(lineno) +
                                     ": expected header 'n mode'");
        }
        mode = parse_mode(mode_word);
        break;
    }
    if (n < 0) throw std::runtime_error("graph file: missing header line");
    SumGraph g(n, mode);
    while (std::getline(in, line)) {
        ++lineno;
        if (!significant_line(line)) continue;
        std::istringstream edge(line);
        Vertex u, v;
        if (!(edge >> u >> v)) {
            throw std::runtime_error("graph file line " + std::to_string(lineno) +
                                     ": expected edge 'u v'");
        }
        try {
            g.add_edge(u, v);
        } catch (const std::exception& e) {
            throw std::runtime_error("graph file line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return g;
}

SumGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    return parse_graph(in);
}

void write_graph(std::ostream& out, const SumGraph& g) {
    out << g.vertex_count() << ' ' << to_string(g.mode()) << '\n';
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = u; v < g.vertex_count(); ++v) {
            if (g.adjacent(u, v)) out << u << ' ' << v << '\n';
        }
    }
}

std::string graph_to_string(const SumGraph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

std::string to_dot(const SumGraph& g, const std::vector<Label>& vertex_labels) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (!vertex_labels.empty()) out << " [label=\"" << vertex_labels.at(v) << "\"]";
        out << ";\n";
    }
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = u; v < g.vertex_count(); ++v) {
            if (g.adjacent(u, v)) out << "  " << u << " -- " << v << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace sumg
