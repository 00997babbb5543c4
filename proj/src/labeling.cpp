#include "sumg/labeling.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace sumg {

Labeling::Labeling(SumGraph graph, std::vector<Label> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) != graph_.vertex_count()) {
        throw std::invalid_argument("labeling size " + std::to_string(labels_.size()) +
                                    " does not match vertex count " +
                                    std::to_string(graph_.vertex_count()));
    }
    for (Label x : labels_) {
        if (x < 1) throw std::invalid_argument("labels must be positive, got " + std::to_string(x));
    }
}

bool Labeling::injective() const {
    std::vector<Label> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::vector<Label> Labeling::label_set() const {
    std::vector<Label> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return sorted;
}

std::vector<Violation> validate(const Labeling& l) {
    const SumGraph& g = l.graph();
    const int n = g.vertex_count();
    std::unordered_set<Label> labels(l.labels().begin(), l.labels().end());
    std::vector<Violation> out;
    const bool loops = g.mode() == GraphMode::WithLoops;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = loops ? u : u + 1; v < n; ++v) {
            Label s = l.label(u) + l.label(v);
            bool guaranteed = labels.count(s) > 0;
            bool edge = g.adjacent(u, v);
            if (edge && !guaranteed) out.push_back({ViolationKind::UnguaranteedEdge, u, v, s});
            if (!edge && guaranteed) out.push_back({ViolationKind::MissingEdge, u, v, s});
        }
    }
    return out;
}

bool is_valid(const Labeling& l) { return validate(l).empty(); }

TerminalSet terminals(const Labeling& l, Vertex v) { return terminals(l.graph(), v); }

Labeling normalize(const Labeling& l) {
    if (!is_valid(l)) throw std::invalid_argument("normalize: labeling is not a valid sum labeling");
    Label g = 0;
    for (Label x : l.labels()) g = std::gcd(g, x);
    if (g <= 1) return l;
    std::vector<Label> scaled;
    scaled.reserve(l.labels().size());
    for (Label x : l.labels()) scaled.push_back(x / g);
    return Labeling(l.graph(), std::move(scaled));
}

bool is_minimal(const Labeling& l) {
    return std::find(l.labels().begin(), l.labels().end(), Label{1}) != l.labels().end();
}

Labeling scale(const Labeling& l, Label factor) {
    if (factor < 1) throw std::invalid_argument("scale factor must be positive");
    std::vector<Label> scaled;
    scaled.reserve(l.labels().size());
    for (Label x : l.labels()) scaled.push_back(x * factor);
    return Labeling(l.graph(), std::move(scaled));
}

Labeling identity_labeling(const InducedGraph& ig) { return Labeling(ig.graph, ig.labels); }

std::vector<Label> parse_labels(std::istream& in) {
    std::vector<Label> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        Label x;
        if (tokens >> x) {
            out.push_back(x);
            std::string extra;
            if (tokens >> extra) {
                throw std::runtime_error("labeling file line " + std::to_string(lineno) +
                                         ": expected one integer per line");
            }
        }
    }
    return out;
}

std::vector<Label> parse_labels_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open labeling file '" + path + "'");
    return parse_labels(in);
}

std::string labels_to_string(const std::vector<Label>& labels) {
    std::ostringstream out;
    for (Label x : labels) out << x << '\n';
    return out.str();
}

}  // namespace sumg
