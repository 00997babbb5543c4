#include "sumg/induce.hpp"

#include <stdexcept>
#include <string>

namespace sumg {

InducedGraph induce(const LabelBag& bag, GraphMode mode) {
    const auto& vals = bag.values();
    const int n = bag.size();
    SumGraph g(n, mode);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (bag.contains(vals[u] + vals[v])) g.add_edge(u, v);
        }
        if (mode == GraphMode::WithLoops && bag.contains(2 * vals[u])) g.add_edge(u, u);
    }
    InducedGraph out{std::move(g), vals, {}, bag};
    for (int v = 0; v < n; ++v) out.psi[vals[v]].push_back(v);
    return out;
}

InducedGraph gen_A(int n) {
    if (n < 3) throw std::invalid_argument("gen_A requires n >= 3");
    std::vector<Label> vals;
    for (Label i = 2; i <= n; ++i) vals.push_back(i);
    vals.push_back(n + 2);
    return induce(LabelBag(std::move(vals)), GraphMode::WithLoops);
}

InducedGraph gen_gap_graph(int k, int gap) {
    if (gap < 2 || gap > k) {
        throw std::invalid_argument("gap " + std::to_string(gap) + " outside [2, " +
                                    std::to_string(k) + "]");
    }
    std::vector<Label> vals;
    for (Label i = 2; i <= k; ++i) {
        if (i != gap) vals.push_back(i);
    }
    return induce(LabelBag(std::move(vals)), GraphMode::WithLoops);
}

LabelBag expand_cliques(const LabelBag& bag, const std::map<Label, int>& multiplicities) {
    for (const auto& [value, count] : multiplicities) {
        if (!bag.contains(2 * value)) {
            throw std::invalid_argument("expand_cliques: value " + std::to_string(value) +
                                        " carries no loop (twice it is not in the bag)");
        }
        if (count < 2) {
            throw std::invalid_argument("expand_cliques: multiplicity for value " +
                                        std::to_string(value) + " must be at least 2");
        }
    }
    std::vector<Label> out;
    for (Label value : bag.distinct_values()) {
        auto it = multiplicities.find(value);
        if (bag.contains(2 * value)) {
            if (it == multiplicities.end()) {
                throw std::invalid_argument("expand_cliques: loop-carrying value " +
                                            std::to_string(value) + " missing from the map");
            }
            out.insert(out.end(), it->second, value);
        } else {
            out.insert(out.end(), bag.multiplicity(value), value);
        }
    }
    return LabelBag(std::move(out));
}

LabelBag expand_cliques_uniform(const LabelBag& bag, int k) {
    std::map<Label, int> mults;
    for (Label value : bag.distinct_values()) {
        if (bag.contains(2 * value)) mults[value] = k;
    }
    return expand_cliques(bag, mults);
}

SumGraph gen_standard(Family family, int n, int extra_isolates) {
    if (n < 1 || extra_isolates < 0) throw std::invalid_argument("gen_standard: bad sizes");
    if (family == Family::Cycle && n < 3) throw std::invalid_argument("cycle needs n >= 3");
    if (family == Family::Star && n < 2) throw std::invalid_argument("star needs n >= 2");
    SumGraph g(n + extra_isolates, GraphMode::Loopless);
    switch (family) {
        case Family::Path:
            for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
            break;
        case Family::Cycle:
            for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
            break;
        case Family::Complete:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
            break;
        case Family::Star:
            for (int v = 1; v < n; ++v) g.add_edge(0, v);
            break;
    }
    return g;
}

}  // namespace sumg
