#include "sumg/search.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sumg {

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::ExhaustedWithinBound: return "exhausted-within-bound";
        case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

namespace {

constexpr Label kMaxSearchBound = 4'000'000;
constexpr int kNoOne = std::numeric_limits<int>::max();

using Clock = std::chrono::steady_clock;

struct Engine {
    SumGraph g;  // effective-mode copy
    SearchConfig cfg;
    Label B;
    int n;
    bool with_loops;

    // class structure
    std::vector<std::vector<Vertex>> classes;
    std::vector<int> class_of;           // vertex -> class id
    std::vector<int> class_t;            // terminal count (shared by members)
    std::vector<char> class_intra_adj;   // members mutually adjacent
    std::vector<int> core_class_order;   // class ids in search priority order
    std::vector<int> order_of_class;     // class id -> core position, -1 for free
    int free_class = -1;

    std::vector<char> adj;                    // n*n adjacency
    std::vector<std::vector<Vertex>> nbrs;    // neighbors without self

    // per-value state, indexed 0..B
    std::vector<int> label_count;   // multiset of assigned labels
    std::vector<int> value_class;   // class id + 1 of holders, 0 when unused
    std::vector<char> in_R;         // pending required sums
    std::vector<char> in_F;         // forbidden as future labels
    std::vector<Label> R_sorted;    // pending sums, ascending (small)

    // per-vertex state
    std::vector<Label> label_of;    // 0 = unassigned
    std::vector<Label> vertex_cap;  // B - max assigned-neighbor label
    std::vector<int> unassigned_nbrs;
    std::vector<int> next_member;   // per class

    // lanes
    int core_total = 0, core_assigned = 0;
    int free_total = 0, free_assigned = 0;
    Label prev_core_value = 0;
    int prev_core_order = -1;
    Label prev_free_value = 0;
    int distinct_core = 0;
    Label last_core_distinct = 0;
    int core_runs = 0;
    int one_min_t = kNoOne;  // min terminal count over holders of label 1
    bool must_place_one_in_core = false;

    std::vector<Vertex> assigned;  // assignment order

    // results
    std::vector<Labeling> results;
    std::set<std::vector<Label>> seen_multisets;
    std::uint64_t nodes = 0;
    bool stop_results = false;
    bool stop_budget = false;
    Clock::time_point deadline;
    std::uint64_t budget_check = 0;

    Engine(const SumGraph& graph, const SearchConfig& config)
        : g(effective_graph(graph, config)), cfg(config), B(config.max_label),
          n(g.vertex_count()), with_loops(g.mode() == GraphMode::WithLoops) {
        if (B < 1) throw std::invalid_argument("max_label must be positive");
        if (B > kMaxSearchBound) {
            throw std::invalid_argument("max_label " + std::to_string(B) +
                                        " exceeds the search backend limit " +
                                        std::to_string(kMaxSearchBound));
        }
        if (cfg.require_injective && B < n) {
            throw std::invalid_argument(
                "max_label must be at least the vertex count for injective search");
        }
        if (cfg.max_results < 1) throw std::invalid_argument("max_results must be positive");

        classes = equivalence_classes(g);
        class_of.assign(n, -1);
        for (std::size_t c = 0; c < classes.size(); ++c) {
            for (Vertex v : classes[c]) class_of[v] = static_cast<int>(c);
        }
        class_t.resize(classes.size());
        class_intra_adj.resize(classes.size());
        for (std::size_t c = 0; c < classes.size(); ++c) {
            class_t[c] = terminal_count(g, classes[c].front());
            class_intra_adj[c] =
                classes[c].size() >= 2 && g.adjacent(classes[c][0], classes[c][1]);
            if (g.degree(classes[c].front()) == 0) free_class = static_cast<int>(c);
        }
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (static_cast<int>(c) != free_class) core_class_order.push_back(c);
        }
        std::sort(core_class_order.begin(), core_class_order.end(), [&](int a, int b) {
            if (class_t[a] != class_t[b]) return class_t[a] < class_t[b];
            return classes[a].front() < classes[b].front();
        });
        order_of_class.assign(classes.size(), -1);
        for (std::size_t i = 0; i < core_class_order.size(); ++i) {
            order_of_class[core_class_order[i]] = static_cast<int>(i);
        }
        free_total = free_class >= 0 ? static_cast<int>(classes[free_class].size()) : 0;
        core_total = n - free_total;

        adj.assign(static_cast<std::size_t>(n) * n, 0);
        nbrs.resize(n);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = 0; v < n; ++v) {
                if (g.adjacent(u, v)) {
                    adj[static_cast<std::size_t>(u) * n + v] = 1;
                    if (v != u) nbrs[u].push_back(v);
                }
            }
        }

        label_count.assign(B + 1, 0);
        value_class.assign(B + 1, 0);
        in_R.assign(B + 1, 0);
        in_F.assign(B + 1, 0);
        R_sorted.reserve(n + 4);
        label_of.assign(n, 0);
        vertex_cap.assign(n, B);
        unassigned_nbrs.assign(n, 0);
        for (Vertex v = 0; v < n; ++v) unassigned_nbrs[v] = static_cast<int>(nbrs[v].size());
        next_member.assign(classes.size(), 0);
    }

    static SumGraph effective_graph(const SumGraph& graph, const SearchConfig& config) {
        GraphMode mode = config.mode.value_or(graph.mode());
        if (mode == graph.mode()) return graph;
        if (mode == GraphMode::Loopless && graph.loop_count() > 0) {
            throw std::invalid_argument(
                "cannot search a graph with loops under loopless semantics");
        }
        SumGraph out(graph.vertex_count(), mode);
        for (Vertex u = 0; u < graph.vertex_count(); ++u) {
            for (Vertex v = u; v < graph.vertex_count(); ++v) {
                if (graph.adjacent(u, v)) out.add_edge(u, v);
            }
        }
        return out;
    }

    bool adjacent(Vertex u, Vertex v) const { return adj[static_cast<std::size_t>(u) * n + v]; }
    bool stopping() const { return stop_results || stop_budget; }

    void note_node() {
        ++nodes;
        if ((++budget_check & 0x1fff) == 0 && Clock::now() > deadline) stop_budget = true;
    }

    void r_insert(Label s) {
        in_R[s] = 1;
        R_sorted.insert(std::lower_bound(R_sorted.begin(), R_sorted.end(), s), s);
    }
    void r_erase(Label s) {
        in_R[s] = 0;
        R_sorted.erase(std::lower_bound(R_sorted.begin(), R_sorted.end(), s));
    }
    int r_count() const { return static_cast<int>(R_sorted.size()); }

    // Largest admissible next value when the k smallest pendings may still be
    // covered by other vertices: the (k+1)-th smallest pending, else B.
    Label pending_cap(int k) const {
        if (r_count() <= k) return B;
        return R_sorted[k];
    }

    // --- assignment with undo -------------------------------------------

    struct Frame {
        Vertex v = -1;
        Label x = 0;
        bool covered_pending = false;
        bool new_distinct = false;
        int added_runs = 0;
        Label saved_last_distinct = 0;
        Label saved_prev_core = 0;
        int saved_prev_order = -1;
        Label saved_prev_free = 0;
        int saved_one_min_t = 0;
        std::vector<Label> r_added;
        std::vector<Label> f_added;
        std::vector<std::pair<Vertex, Label>> cap_restore;
        void reset() {
            r_added.clear();
            f_added.clear();
            cap_restore.clear();
            covered_pending = false;
            new_distinct = false;
            added_runs = 0;
        }
    };
    std::vector<Frame> frames;

    // Pair constraints of candidate (v, x) against every assigned vertex;
    // false when inconsistent. Queues R/F additions in the frame without
    // applying them (queued sets are checked against each other too).
    bool collect_pair_constraints(Vertex v, Label x, Frame& fr) {
        auto queued = [](const std::vector<Label>& xs, Label s) {
            return std::find(xs.begin(), xs.end(), s) != xs.end();
        };
        auto require_sum = [&](Label s) {
            if (s > B) return false;
            if (label_count[s] > 0) return true;
            if (in_F[s] || queued(fr.f_added, s)) return false;
            if (!in_R[s] && !queued(fr.r_added, s)) fr.r_added.push_back(s);
            return true;
        };
        auto forbid_sum = [&](Label s) {
            if (s > B) return true;
            if (label_count[s] > 0) return false;
            if (in_R[s] || queued(fr.r_added, s)) return false;
            if (!in_F[s] && !queued(fr.f_added, s)) fr.f_added.push_back(s);
            return true;
        };
        for (Vertex u : assigned) {
            Label s = x + label_of[u];
            if (adjacent(v, u)) {
                if (!require_sum(s)) return false;
            } else {
                if (!forbid_sum(s)) return false;
            }
        }
        if (with_loops) {
            Label s = 2 * x;
            if (adjacent(v, v)) {
                if (!require_sum(s)) return false;
            } else {
                if (!forbid_sum(s)) return false;
            }
        }
        return true;
    }

    void apply(Frame& fr, bool core_lane) {
        const Vertex v = fr.v;
        const Label x = fr.x;
        fr.saved_one_min_t = one_min_t;
        if (in_R[x]) {
            r_erase(x);
            fr.covered_pending = true;
        }
        for (Label s : fr.r_added) r_insert(s);
        for (Label s : fr.f_added) in_F[s] = 1;
        ++label_count[x];
        value_class[x] = class_of[v] + 1;
        label_of[v] = x;
        assigned.push_back(v);
        ++next_member[class_of[v]];
        for (Vertex w : nbrs[v]) {
            --unassigned_nbrs[w];
            if (label_of[w] == 0) {
                Label cap = B - x;
                if (cap < vertex_cap[w]) {
                    fr.cap_restore.push_back({w, vertex_cap[w]});
                    vertex_cap[w] = cap;
                }
            }
        }
        if (x == 1) one_min_t = std::min(one_min_t, class_t[class_of[v]]);
        if (core_lane) {
            ++core_assigned;
            fr.saved_prev_core = prev_core_value;
            fr.saved_prev_order = prev_core_order;
            fr.new_distinct = label_count[x] == 1;
            if (fr.new_distinct) {
                ++distinct_core;
                fr.saved_last_distinct = last_core_distinct;
                if (last_core_distinct == 0 || x > last_core_distinct + 1) {
                    ++core_runs;
                    fr.added_runs = 1;
                }
                last_core_distinct = x;
            }
            prev_core_value = x;
            prev_core_order = order_of_class[class_of[v]];
        } else {
            ++free_assigned;
            fr.saved_prev_free = prev_free_value;
            prev_free_value = x;
        }
    }

    void undo(Frame& fr, bool core_lane) {
        const Vertex v = fr.v;
        const Label x = fr.x;
        if (core_lane) {
            --core_assigned;
            prev_core_value = fr.saved_prev_core;
            prev_core_order = fr.saved_prev_order;
            if (fr.new_distinct) {
                --distinct_core;
                last_core_distinct = fr.saved_last_distinct;
                core_runs -= fr.added_runs;
            }
        } else {
            --free_assigned;
            prev_free_value = fr.saved_prev_free;
        }
        one_min_t = fr.saved_one_min_t;
        for (auto& [w, cap] : fr.cap_restore) vertex_cap[w] = cap;
        for (Vertex w : nbrs[v]) ++unassigned_nbrs[w];
        --next_member[class_of[v]];
        assigned.pop_back();
        label_of[v] = 0;
        if (--label_count[x] == 0) value_class[x] = 0;
        for (Label s : fr.f_added) in_F[s] = 0;
        for (Label s : fr.r_added) r_erase(s);
        if (fr.covered_pending) r_insert(x);
        fr.reset();
    }

    void emit() {
        if (r_count() != 0) throw std::logic_error("search: pending sums at a full assignment");
        std::vector<Label> ls(label_of.begin(), label_of.end());
        if (!cfg.require_label_one) {
            Label gg = 0;
            for (Label x : ls) gg = std::gcd(gg, x);
            if (gg > 1) return;  // only gcd-1 labelings are emitted
        }
        std::vector<Label> key = ls;
        std::sort(key.begin(), key.end());
        if (!seen_multisets.insert(key).second) return;
        Labeling out(g, std::move(ls));
        if (!validate(out).empty()) {
            throw std::logic_error("search: emitted labeling failed validation");
        }
        results.push_back(std::move(out));
        if (static_cast<int>(results.size()) >= cfg.max_results) stop_results = true;
    }

    void free_step() {
        if (stopping()) return;
        if (free_assigned == free_total) {
            emit();
            return;
        }
        const int remaining = free_total - free_assigned;
        if (r_count() > remaining) return;
        const Vertex v = classes[free_class][next_member[free_class]];
        const Label floor = prev_free_value == 0 ? 1 : prev_free_value;
        const Label cap = pending_cap(0);
        Frame& fr = frames[assigned.size()];
        for (Label x = floor; x <= cap && !stopping(); ++x) {
            if (cfg.require_label_one && one_min_t == kNoOne && x > 1) break;
            if (in_F[x]) continue;
            if (label_count[x] > 0) {
                if (cfg.require_injective) continue;
                if (value_class[x] != free_class + 1) continue;  // equal labels need equivalence
            }
            fr.v = v;
            fr.x = x;
            if (!collect_pair_constraints(v, x, fr)) {
                fr.reset();
                continue;
            }
            note_node();
            if (stopping()) {
                fr.reset();
                return;
            }
            apply(fr, /*core_lane=*/false);
            if (r_count() <= free_total - free_assigned) free_step();
            undo(fr, /*core_lane=*/false);
        }
    }

    void core_step() {
        if (stopping()) return;
        if (core_assigned == core_total) {
            free_step();
            return;
        }
        const int free_remaining = free_total - free_assigned;
        const Label floor = prev_core_value == 0 ? 1 : prev_core_value;
        const Label cap = pending_cap(free_remaining);
        Frame& fr = frames[assigned.size()];
        for (Label x = floor; x <= cap && !stopping(); ++x) {
            if (must_place_one_in_core && one_min_t == kNoOne && x > 1) break;
            if (in_F[x]) continue;
            const bool tie = label_count[x] > 0;
            if (tie && cfg.require_injective) continue;
            for (int oi = 0; oi < static_cast<int>(core_class_order.size()); ++oi) {
                if (stopping()) break;
                const int c = core_class_order[oi];
                if (next_member[c] >= static_cast<int>(classes[c].size())) continue;
                if (x == prev_core_value && oi < prev_core_order) continue;
                if (tie && value_class[x] != c + 1) continue;
                const int rank = distinct_core + (tie ? 0 : 1);
                int bound = class_t[c];
                if (tie && class_intra_adj[c]) --bound;  // shared label on adjacent twins
                if (rank > bound) continue;
                const Vertex v = classes[c][next_member[c]];
                if (x > vertex_cap[v]) continue;
                if (unassigned_nbrs[v] > 0 && 2 * x > B) continue;  // neighbor labels will be >= x
                fr.v = v;
                fr.x = x;
                if (!collect_pair_constraints(v, x, fr)) {
                    fr.reset();
                    continue;
                }
                note_node();
                if (stopping()) {
                    fr.reset();
                    break;
                }
                apply(fr, /*core_lane=*/true);
                bool feasible = r_count() <= (core_total - core_assigned) + free_remaining;
                if (feasible && one_min_t != kNoOne && core_runs - free_total > one_min_t) {
                    feasible = false;  // label set would split into too many integer intervals
                }
                if (feasible) core_step();
                undo(fr, /*core_lane=*/true);
            }
        }
    }

    SearchOutcome run() {
        deadline = Clock::now() + cfg.time_budget;
        frames.resize(n + 1);
        SearchOutcome out;
        if (n == 0) {
            if (!cfg.require_label_one) {
                out.labelings.push_back(Labeling(g, {}));
                out.status = SearchStatus::Found;
            }
            out.complete = true;
            return out;
        }
        if (cfg.require_label_one && free_class >= 0) {
            // Either an isolated vertex carries 1 or a core vertex does.
            Vertex v0 = classes[free_class][0];
            Frame& fr = frames[0];
            fr.v = v0;
            fr.x = 1;
            if (collect_pair_constraints(v0, 1, fr)) {
                note_node();
                apply(fr, /*core_lane=*/false);
                core_step();
                undo(fr, /*core_lane=*/false);
            } else {
                fr.reset();
            }
            if (!stopping() && core_total > 0) {
                must_place_one_in_core = true;
                core_step();
                must_place_one_in_core = false;
            }
        } else {
            must_place_one_in_core = cfg.require_label_one;
            core_step();
        }
        out.nodes_explored = nodes;
        out.labelings = std::move(results);
        if (!out.labelings.empty()) {
            out.status = SearchStatus::Found;
            out.complete = !stop_budget && !stop_results;
        } else if (stop_budget) {
            out.status = SearchStatus::BudgetExceeded;
            out.complete = false;
        } else {
            out.status = SearchStatus::ExhaustedWithinBound;
            out.complete = true;
        }
        return out;
    }
};

}  // namespace

SearchOutcome find_labelings(const SumGraph& g, const SearchConfig& cfg) {
    Engine engine(g, cfg);
    return engine.run();
}

SearchOutcome has_minimal_labeling_bounded(const SumGraph& g, Label max_label,
                                           std::chrono::milliseconds time_budget) {
    SearchConfig cfg;
    cfg.max_label = max_label;
    cfg.require_label_one = true;
    cfg.max_results = 1;
    cfg.time_budget = time_budget;
    return find_labelings(g, cfg);
}

std::optional<SigmaResult> sum_number_bounded(const SumGraph& g, int max_isolates, Label max_label,
                                              std::chrono::milliseconds budget_per_count) {
    if (g.mode() != GraphMode::Loopless) {
        throw std::invalid_argument("sum_number_bounded expects a loopless graph");
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) {
            throw std::invalid_argument("sum_number_bounded: strip isolated vertices first");
        }
    }
    if (max_isolates < 0) throw std::invalid_argument("max_isolates must be non-negative");

    std::uint64_t total_nodes = 0;
    bool exhaustive = true;
    for (int s = 0; s <= max_isolates; ++s) {
        SumGraph ext(g.vertex_count() + s, GraphMode::Loopless);
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
                if (g.adjacent(u, v)) ext.add_edge(u, v);
            }
        }
        SearchConfig cfg;
        cfg.max_label = max_label;
        cfg.require_injective = true;
        cfg.max_results = 1;
        cfg.time_budget = budget_per_count;
        SearchOutcome out = find_labelings(ext, cfg);
        total_nodes += out.nodes_explored;
        if (out.status == SearchStatus::Found) {
            return SigmaResult{s, out.labelings.front(), exhaustive, total_nodes};
        }
        if (out.status != SearchStatus::ExhaustedWithinBound) exhaustive = false;
    }
    return std::nullopt;
}

void oracle_enumerate(int vertex_count, Label max_value, GraphMode mode,
                      const std::function<bool(const LabelBag&, const InducedGraph&)>& visit) {
    if (vertex_count < 0 || vertex_count > 7) {
        throw std::out_of_range("oracle_enumerate supports at most 7 vertices");
    }
    if (max_value < 1 || max_value > 30) {
        throw std::out_of_range("oracle_enumerate supports values up to 30");
    }
    std::vector<Label> tuple(vertex_count, 0);
    bool keep_going = true;
    auto rec = [&](auto&& self, int pos, Label lo) -> void {
        if (!keep_going) return;
        if (pos == vertex_count) {
            LabelBag bag(tuple);
            InducedGraph ig = induce(bag, mode);
            keep_going = visit(bag, ig);
            return;
        }
        for (Label x = lo; x <= max_value && keep_going; ++x) {
            tuple[pos] = x;
            self(self, pos + 1, x);
        }
    };
    rec(rec, 0, 1);
}

}  // namespace sumg
