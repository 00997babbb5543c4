#include "sumg/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace sumg {

namespace {

constexpr long kNodeBudget = 2'000'000;

struct CanonSearch {
    const SumGraph& g;
    int n;
    long nodes = 0;
    std::string best;  // smallest encoding seen so far
    bool have_best = false;

    explicit CanonSearch(const SumGraph& graph) : g(graph), n(graph.vertex_count()) {}

    // Stable per-vertex recoloring by (old color, sorted neighbor colors).
    // Loops contribute the vertex's own color to its multiset, so they
    // participate in refinement as an attribute.
    std::vector<int> refine(std::vector<int> colors) const {
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> sigs(n);
            for (Vertex v = 0; v < n; ++v) {
                std::vector<int> sig;
                sig.push_back(colors[v]);
                for (Vertex w = 0; w < n; ++w) {
                    if (g.adjacent(v, w)) sig.push_back(colors[w]);
                }
                std::sort(sig.begin() + 1, sig.end());
                sigs[v] = {std::move(sig), v};
            }
            std::map<std::vector<int>, int> ids;
            for (const auto& [sig, v] : sigs) ids.emplace(sig, 0);
            int next = 0;
            for (auto& [sig, id] : ids) id = next++;
            std::vector<int> out(n);
            int changed = 0;
            for (const auto& [sig, v] : sigs) {
                out[v] = ids[sig];
                if (out[v] != colors[v]) changed = 1;
            }
            // Color ids are normalized each round; compare class structure
            // via the count of distinct colors to detect the fixpoint.
            std::vector<int> a = colors, b = out;
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
            std::sort(b.begin(), b.end());
            b.erase(std::unique(b.begin(), b.end()), b.end());
            colors = std::move(out);
            if (!changed || a.size() == b.size()) return colors;
        }
    }

    std::string encode(const std::vector<int>& colors) const {
        // colors discrete: vertex with color c goes to position c
        std::vector<Vertex> at(n);
        for (Vertex v = 0; v < n; ++v) at[colors[v]] = v;
        std::string out;
        out.reserve(4 + static_cast<std::size_t>(n) * (n + 1) / 16 + 1);
        out.push_back(static_cast<char>(n));
        out.push_back(g.mode() == GraphMode::WithLoops ? 'L' : 'S');
        int acc = 0, bits = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                acc = (acc << 1) | (g.adjacent(at[i], at[j]) ? 1 : 0);
                if (++bits == 8) {
                    out.push_back(static_cast<char>(acc));
                    acc = 0;
                    bits = 0;
                }
            }
        }
        if (bits) out.push_back(static_cast<char>(acc << (8 - bits)));
        return out;
    }

    bool discrete(const std::vector<int>& colors) const {
        std::vector<char> seen(n, 0);
        for (int c : colors) {
            if (c >= n || seen[c]) return false;
            seen[c] = 1;
        }
        return true;
    }

    void search(const std::vector<int>& colors) {
        if (++nodes > kNodeBudget) {
            throw std::length_error("canonical_form: search budget exceeded for this graph");
        }
        if (discrete(colors)) {
            std::string enc = encode(colors);
            if (!have_best || enc < best) {
                best = std::move(enc);
                have_best = true;
            }
            return;
        }
        // first (smallest color id) non-singleton cell
        int target = -1;
        std::vector<int> count(n + 1, 0);
        for (int c : colors) ++count[c];
        for (int c = 0; c <= n; ++c) {
            if (count[c] > 1) {
                target = c;
                break;
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            if (colors[v] != target) continue;
            std::vector<int> next(n);
            // individualize v: shift everything at or above its cell up,
            // give v the cell's old id
            for (Vertex w = 0; w < n; ++w) {
                next[w] = colors[w] + (colors[w] >= target ? 1 : 0);
            }
            next[v] = target;
            search(refine(std::move(next)));
        }
    }
};

}  // namespace

std::string canonical_form(const SumGraph& g) {
    const int n = g.vertex_count();
    if (n > kCanonicalMaxVertices) {
        throw std::length_error("canonical_form: graph has " + std::to_string(n) +
                                " vertices; supported limit is " +
                                std::to_string(kCanonicalMaxVertices));
    }
    CanonSearch cs(g);
    if (n == 0) return cs.encode({});
    // initial color: (loop bit, degree)
    std::vector<std::pair<std::pair<int, int>, Vertex>> init;
    init.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        init.push_back({{g.has_loop(v) ? 1 : 0, g.degree(v)}, v});
    }
    std::sort(init.begin(), init.end());
    std::vector<int> colors(n);
    int next = -1;
    std::pair<int, int> prev{-1, -1};
    for (const auto& [key, v] : init) {
        if (key != prev) {
            ++next;
            prev = key;
        }
        colors[v] = next;
    }
    cs.search(cs.refine(std::move(colors)));
    return cs.best;
}

bool isomorphic(const SumGraph& g, const SumGraph& h) {
    if (g.mode() != h.mode()) {
        throw std::invalid_argument("isomorphic: graphs must share a mode");
    }
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() ||
        g.loop_count() != h.loop_count()) {
        return false;
    }
    auto degree_profile = [](const SumGraph& x) {
        std::vector<std::pair<int, int>> d;
        for (Vertex v = 0; v < x.vertex_count(); ++v) {
            d.push_back({x.degree(v), x.has_loop(v) ? 1 : 0});
        }
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degree_profile(g) != degree_profile(h)) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace sumg
