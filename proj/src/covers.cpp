#include "sumg/covers.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace sumg {

bool ArithSequence::contains(Label x) const {
    if (length <= 0) return false;
    if (x < start || x > last()) return false;
    if (difference == 0) return x == start;
    return (x - start) % difference == 0;
}

std::vector<Label> ArithSequence::elements() const {
    std::vector<Label> out;
    out.reserve(length);
    for (int i = 0; i < length; ++i) out.push_back(start + static_cast<Label>(i) * difference);
    return out;
}

std::vector<Label> CoverDescription::covered_labels() const {
    std::vector<Label> out;
    for (const auto& cs : sequences) {
        auto elems = cs.seq.elements();
        out.insert(out.end(), elems.begin(), elems.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

CoverDescription build_cover(const Labeling& l, Vertex generator) {
    if (!is_valid(l)) throw std::invalid_argument("build_cover: labeling is not valid");
    const SumGraph& g = l.graph();
    const Label gen = l.label(generator);
    const std::vector<Label> label_set = l.label_set();
    std::unordered_set<Label> in_set(label_set.begin(), label_set.end());

    // Label categories relative to the generator. A label may be carried by
    // several vertices; it counts as non-terminal when any neighbor carries
    // it and as proper-terminal when any proper terminal does.
    std::set<Label> nonterm, propterm;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
        if (g.adjacent(generator, w)) {
            nonterm.insert(l.label(w));
        } else if (w != generator) {
            propterm.insert(l.label(w));
        }
    }
    const bool improper = !g.adjacent(generator, generator);

    CoverDescription cover;
    cover.generator_label = gen;
    cover.terminal_labels = propterm;
    if (improper) cover.terminal_labels.insert(gen);

    std::unordered_set<Label> covered;
    for (Label a : nonterm) {
        if (covered.count(a)) continue;
        ArithSequence seq{a, gen, 1};
        covered.insert(a);
        while (in_set.count(seq.last() + gen)) {
            ++seq.length;
            covered.insert(seq.last());
        }
        // A maximal run from a non-terminal label always reaches a terminal
        // label: an uninterrupted non-terminal end would have a guaranteed
        // next element.
        if (!cover.terminal_labels.count(seq.last())) {
            throw std::logic_error("build_cover: chain ended on a non-terminal label");
        }
        if (seq.length < 2) {
            throw std::logic_error("build_cover: chain from a non-terminal label cannot be a singleton");
        }
        cover.sequences.push_back({seq, SequenceRole::Chain});
    }
    for (Label t : propterm) {
        if (covered.count(t)) continue;
        covered.insert(t);
        cover.sequences.push_back({{t, gen, 1}, SequenceRole::TerminalSingleton});
    }
    if (improper && !covered.count(gen)) {
        covered.insert(gen);
        cover.sequences.push_back({{gen, gen, 1}, SequenceRole::GeneratorSingleton});
    }

    // Invariants of the construction.
    if (cover.covered_labels() != label_set) {
        throw std::logic_error("build_cover: sequences do not partition the label set");
    }
    if (cover.sequence_count() > terminal_count(g, generator)) {
        throw std::logic_error("build_cover: more sequences than terminals");
    }
    return cover;
}

bool mergeable(int t_i, int t_j, int non_equiv_count) {
    if (t_i < 1 || t_j < 1) throw std::invalid_argument("mergeable: terminal counts must be >= 1");
    return non_equiv_count >= 2 * (t_i - 1) * (t_j - 1) + 3;
}

std::optional<SharedRun> shared_run(const CoverDescription& c1, const CoverDescription& c2) {
    if (c1.covered_labels() != c2.covered_labels()) {
        throw std::invalid_argument("shared_run: covers describe different label sets");
    }
    for (int i = 0; i < c1.sequence_count(); ++i) {
        for (int j = 0; j < c2.sequence_count(); ++j) {
            auto a = c1.sequences[i].seq.elements();
            auto b = c2.sequences[j].seq.elements();
            std::vector<Label> shared;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(shared));
            if (shared.size() >= 3) {
                return SharedRun{i, j, {shared[0], shared[1], shared[2]}};
            }
        }
    }
    return std::nullopt;
}

std::vector<std::pair<int, int>> merge_relations(int t1, int t2) {
    if (t1 < 2 || t2 < 2) throw std::invalid_argument("merge_relations: terminal counts must be >= 2");
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= t1 - 1; ++j) {
        for (int k = 1; k <= t2 - 1; ++k) {
            if (std::gcd(j, k) == 1) out.push_back({j, k});
        }
    }
    return out;
}

int merge_one_bound(int t2) {
    if (t2 < 2) throw std::invalid_argument("merge_one_bound: terminal count must be >= 2");
    return t2 - 1;
}

std::string cover_to_string(const CoverDescription& c) {
    std::ostringstream out;
    for (const auto& cs : c.sequences) {
        out << cs.seq.start << " +" << cs.seq.difference << "x" << (cs.seq.length - 1) << " -> "
            << cs.seq.last();
        switch (cs.role) {
            case SequenceRole::Chain: out << " [terminal]"; break;
            case SequenceRole::TerminalSingleton: out << " [terminal]"; break;
            case SequenceRole::GeneratorSingleton: out << " [generator]"; break;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace sumg
