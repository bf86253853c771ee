// Exact and heuristic computation of the t-component stability number and
// t-component chromatic number, plus the greedy-extraction colouring.
#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "cclab/graph.hpp"

namespace cclab {

enum class SolveStatus { optimal, incomplete };

struct SolverLimits {
    std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
    double time_budget_s = std::numeric_limits<double>::infinity();
};

struct Coloring {
    std::vector<int> assignment;  // vertex -> colour index
    int num_colors = 0;
};

inline bool validate_coloring(const Graph& g, const Coloring& c, int t) {
    if (static_cast<int>(c.assignment.size()) != g.n()) return false;
    std::vector<VertexSet> classes(c.num_colors);
    for (int v = 0; v < g.n(); ++v) {
        int col = c.assignment[v];
        if (col < 0 || col >= c.num_colors) return false;
        classes[col].push_back(v);
    }
    for (const auto& cls : classes)
        if (!is_t_component_set(g, cls, t)) return false;
    return true;
}

namespace detail {

// Components of the current vertex set, maintained incrementally. Adding
// a vertex merges every component it touches; the merge is undoable.
class ComponentTracker {
public:
    ComponentTracker(const Graph& g, int t)
        : g_(g), t_(t), label_(g.n(), -1), size_(g.n(), 0), in_set_(g.words_per_row(), 0) {}

    // Order of the component that adding v would create.
    int merged_size(int v) const {
        int total = 1;
        scratch_.clear();
        for (int w = 0; w < g_.words_per_row(); ++w) {
            std::uint64_t word = g_.row(v)[w] & in_set_[w];
            while (word) {
                int u = w * 64 + std::countr_zero(word);
                word &= word - 1;
                int lab = label_[u];
                if (std::find(scratch_.begin(), scratch_.end(), lab) == scratch_.end()) {
                    scratch_.push_back(lab);
                    total += size_[lab];
                }
            }
        }
        return total;
    }

    bool can_add(int v) const { return merged_size(v) <= t_; }

    struct Undo {
        int v;
        std::vector<std::pair<int, int>> relabeled;  // (vertex, old label)
        std::vector<std::pair<int, int>> resized;    // (label, old size)
    };

    Undo add(int v) {
        Undo u;
        u.v = v;
        scratch_.clear();
        for (int w = 0; w < g_.words_per_row(); ++w) {
            std::uint64_t word = g_.row(v)[w] & in_set_[w];
            while (word) {
                int nb = w * 64 + std::countr_zero(word);
                word &= word - 1;
                if (std::find(scratch_.begin(), scratch_.end(), label_[nb]) == scratch_.end())
                    scratch_.push_back(label_[nb]);
            }
        }
        int total = 1;
        for (int lab : scratch_) total += size_[lab];
        // v itself becomes the merged component's label
        for (int lab : scratch_) {
            u.resized.emplace_back(lab, size_[lab]);
            for (int m : members_)
                if (label_[m] == lab && m != v) u.relabeled.emplace_back(m, lab);
        }
        for (auto& [m, old] : u.relabeled) label_[m] = v;
        for (int lab : scratch_) size_[lab] = 0;
        label_[v] = v;
        u.resized.emplace_back(v, size_[v]);
        size_[v] = total;
        members_.push_back(v);
        in_set_[v >> 6] |= 1ULL << (v & 63);
        return u;
    }

    void remove(const Undo& u) {
        in_set_[u.v >> 6] &= ~(1ULL << (u.v & 63));
        members_.pop_back();
        label_[u.v] = -1;
        for (auto it = u.resized.rbegin(); it != u.resized.rend(); ++it) size_[it->first] = it->second;
        for (auto it = u.relabeled.rbegin(); it != u.relabeled.rend(); ++it)
            label_[it->first] = it->second;
    }

    const std::vector<int>& members() const { return members_; }

private:
    const Graph& g_;
    int t_;
    std::vector<int> label_;
    std::vector<int> size_;
    std::vector<std::uint64_t> in_set_;
    std::vector<int> members_;
    mutable std::vector<int> scratch_;
};

inline std::vector<int> degree_desc_order(const Graph& g, const std::vector<int>& pool) {
    std::vector<int> order = pool;
    std::vector<int> deg(g.n());
    for (int v : pool) deg[v] = g.degree(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[a] != deg[b] ? deg[a] > deg[b] : a < b; });
    return order;
}

// Single randomized greedy pass: shuffle the pool, add every vertex that
// keeps all components at order <= t, stop at k_target. Feasibility is
// monotone in the grown set, so one pass per order is exhaustive.
inline VertexSet greedy_fill(const Graph& g, const std::vector<int>& pool, int t, int k_target,
                             std::mt19937_64& rng) {
    std::vector<int> order = pool;
    std::shuffle(order.begin(), order.end(), rng);
    ComponentTracker tracker(g, t);
    for (int v : order) {
        if (static_cast<int>(tracker.members().size()) >= k_target) break;
        if (tracker.can_add(v)) tracker.add(v);
    }
    VertexSet out = tracker.members();
    std::sort(out.begin(), out.end());
    return out;
}

// Min-merge greedy pass: repeatedly add the feasible candidate whose
// merged component would be smallest (random tie-break). Builds many small
// components before any vertex commits to a large one, which reaches
// substantially larger t-component sets than a random-order pass.
inline VertexSet min_merge_fill(const Graph& g, const std::vector<int>& pool, int t, int k_target,
                                std::mt19937_64& rng) {
    ComponentTracker tracker(g, t);
    std::vector<int> cand = pool;
    std::vector<int> ties;
    while (static_cast<int>(tracker.members().size()) < k_target && !cand.empty()) {
        int best = t + 1;
        ties.clear();
        for (int v : cand) {
            int m = tracker.merged_size(v);
            if (m < best) {
                best = m;
                ties.clear();
                ties.push_back(v);
            } else if (m == best) {
                ties.push_back(v);
            }
        }
        if (ties.empty()) break;
        int v = ties[rng() % ties.size()];
        tracker.add(v);
        std::vector<int> next;
        next.reserve(cand.size());
        for (int u : cand)
            if (u != v && tracker.merged_size(u) <= t) next.push_back(u);
        cand.swap(next);
    }
    VertexSet out = tracker.members();
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

struct AlphaResult {
    int size = 0;
    VertexSet witness;
    SolveStatus status = SolveStatus::optimal;
    std::uint64_t nodes = 0;
};

// Exact alpha_t by branch-and-bound. Candidates are scanned in descending
// degree order; a candidate is dropped from a subtree as soon as it can no
// longer be added without creating a component of order > t, and subtrees
// are cut by the bound |current| + |remaining| <= best.
inline AlphaResult alpha_t_exact(const Graph& g, int t, SolverLimits limits = {}) {
    if (t < 1) throw std::invalid_argument("alpha_t_exact: t must be >= 1");
    AlphaResult res;
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);

    // warm start from a few greedy fills
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    for (int r = 0; r < 8; ++r) {
        VertexSet s = r < 2 ? detail::min_merge_fill(g, all, t, g.n(), rng)
                            : detail::greedy_fill(g, all, t, g.n(), rng);
        if (static_cast<int>(s.size()) > res.size) {
            res.size = static_cast<int>(s.size());
            res.witness = s;
        }
    }

    detail::ComponentTracker tracker(g, t);
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(
                            std::isfinite(limits.time_budget_s) ? limits.time_budget_s : 1e9));
    bool aborted = false;

    auto rec = [&](auto&& self, const std::vector<int>& cands) -> void {
        if (aborted) return;
        if (++res.nodes >= limits.node_budget) aborted = true;
        if ((res.nodes & 1023) == 0 && std::chrono::steady_clock::now() > deadline) aborted = true;
        int cur = static_cast<int>(tracker.members().size());
        if (cur > res.size) {
            res.size = cur;
            res.witness = tracker.members();
            std::sort(res.witness.begin(), res.witness.end());
        }
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (aborted) return;
            if (cur + static_cast<int>(cands.size() - i) <= res.size) return;
            int v = cands[i];
            if (tracker.merged_size(v) > t) continue;
            auto undo = tracker.add(v);
            std::vector<int> next;
            next.reserve(cands.size() - i - 1);
            for (std::size_t j = i + 1; j < cands.size(); ++j)
                if (tracker.merged_size(cands[j]) <= t) next.push_back(cands[j]);
            self(self, next);
            tracker.remove(undo);
        }
    };
    rec(rec, detail::degree_desc_order(g, all));
    res.status = aborted ? SolveStatus::incomplete : SolveStatus::optimal;
    return res;
}

// Exact maximum by full subset enumeration; n is capped at 20.
inline int alpha_t_brute(const Graph& g, int t) {
    if (g.n() > 20) throw std::invalid_argument("alpha_t_brute: n > 20 refused");
    if (t < 1) throw std::invalid_argument("alpha_t_brute: t must be >= 1");
    int n = g.n();
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj[v] |= 1u << u;
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int sz = std::popcount(mask);
        if (sz <= best) continue;
        std::uint32_t rest = mask;
        bool ok = true;
        while (rest && ok) {
            // flood one component
            std::uint32_t comp = rest & (~rest + 1), frontier = comp;
            while (frontier) {
                std::uint32_t grow = 0;
                std::uint32_t f = frontier;
                while (f) {
                    int v = std::countr_zero(f);
                    f &= f - 1;
                    grow |= adj[v] & mask & ~comp;
                }
                comp |= grow;
                frontier = grow;
            }
            if (std::popcount(comp) > t) ok = false;
            rest &= ~comp;
        }
        if (ok) best = sz;
    }
    return best;
}

struct ChiResult {
    int num_colors = 0;
    Coloring coloring;
    SolveStatus status = SolveStatus::optimal;
};

namespace detail {

inline bool class_accepts(const Graph& g, const std::vector<int>& cls, int v, int t) {
    // merged component order if v joins cls
    std::vector<int> parent(cls.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t i = 0; i < cls.size(); ++i)
        for (std::size_t j = i + 1; j < cls.size(); ++j)
            if (g.has_edge(cls[i], cls[j])) {
                int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
                if (a != b) parent[a] = b;
            }
    std::vector<int> size(cls.size(), 0);
    for (std::size_t i = 0; i < cls.size(); ++i) size[find(static_cast<int>(i))]++;
    int merged = 1;
    std::vector<char> counted(cls.size(), 0);
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (!g.has_edge(v, cls[i])) continue;
        int r = find(static_cast<int>(i));
        if (!counted[r]) {
            counted[r] = 1;
            merged += size[r];
        }
    }
    return merged <= t;
}

}  // namespace detail

inline AlphaResult alpha_t_heuristic(const Graph& g, int t, RngSeed seed, int restarts = 50);

// Exact chi_t by iterative deepening on the colour count with
// backtracking; intended for n <= ~16.
inline ChiResult chi_t_exact(const Graph& g, int t, SolverLimits limits = {}) {
    if (t < 1) throw std::invalid_argument("chi_t_exact: t must be >= 1");
    int n = g.n();
    ChiResult res;
    if (n == 0) return res;

    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> order = detail::degree_desc_order(g, all);

    std::uint64_t nodes = 0;
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(
                            std::isfinite(limits.time_budget_s) ? limits.time_budget_s : 1e9));
    bool aborted = false;

    std::vector<std::vector<int>> classes;
    std::vector<int> assign(n, -1);
    auto dfs = [&](auto&& self, int idx, int c) -> bool {
        if (aborted) return false;
        if (++nodes >= limits.node_budget ||
            ((nodes & 4095) == 0 && std::chrono::steady_clock::now() > deadline)) {
            aborted = true;
            return false;
        }
        if (idx == n) return true;
        int v = order[idx];
        int used = static_cast<int>(classes.size());
        for (int j = 0; j < used; ++j) {
            if (detail::class_accepts(g, classes[j], v, t)) {
                classes[j].push_back(v);
                assign[v] = j;
                if (self(self, idx + 1, c)) return true;
                classes[j].pop_back();
                assign[v] = -1;
            }
        }
        if (used < c) {
            classes.push_back({v});
            assign[v] = used;
            if (self(self, idx + 1, c)) return true;
            classes.pop_back();
            assign[v] = -1;
        }
        return false;
    };

    for (int c = 1; c <= n; ++c) {
        classes.clear();
        std::fill(assign.begin(), assign.end(), -1);
        if (dfs(dfs, 0, c)) {
            res.num_colors = c;
            res.coloring = {assign, c};
            res.status = SolveStatus::optimal;
            return res;
        }
        if (aborted) break;
    }
    // budget exhausted: report the heuristic colouring as the best upper bound
    Coloring fallback;
    fallback.assignment.resize(n);
    std::vector<char> done(n, 0);
    int col = 0;
    std::mt19937_64 rng(1);
    std::vector<int> remaining = all;
    while (!remaining.empty()) {
        VertexSet cls = detail::greedy_fill(g, remaining, t, n, rng);
        for (int v : cls) fallback.assignment[v] = col, done[v] = 1;
        ++col;
        remaining.erase(std::remove_if(remaining.begin(), remaining.end(),
                                       [&](int v) { return done[v]; }),
                        remaining.end());
    }
    fallback.num_colors = col;
    res.num_colors = col;
    res.coloring = fallback;
    res.status = SolveStatus::incomplete;
    return res;
}

// chi(G) is the t = 1 case.
inline int chromatic_number(const Graph& g) {
    if (g.n() > 16) throw std::invalid_argument("chromatic_number: n > 16 refused");
    return chi_t_exact(g, 1).num_colors;
}

inline AlphaResult alpha_t_heuristic(const Graph& g, int t, RngSeed seed, int restarts) {
    if (t < 1) throw std::invalid_argument("alpha_t_heuristic: t must be >= 1");
    std::mt19937_64 rng(seed.seed);
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    AlphaResult res;
    res.status = SolveStatus::incomplete;
    for (int r = 0; r < restarts; ++r) {
        VertexSet s = detail::min_merge_fill(g, all, t, g.n(), rng);
        if (static_cast<int>(s.size()) > res.size) {
            res.size = static_cast<int>(s.size());
            res.witness = s;
        }
    }
    return res;
}

inline Coloring chi_t_heuristic(const Graph& g, int t, RngSeed seed, int restarts = 20) {
    if (t < 1) throw std::invalid_argument("chi_t_heuristic: t must be >= 1");
    std::mt19937_64 rng(seed.seed);
    Coloring out;
    out.assignment.assign(g.n(), -1);
    std::vector<int> remaining(g.n());
    std::iota(remaining.begin(), remaining.end(), 0);
    int col = 0;
    while (!remaining.empty()) {
        VertexSet best;
        for (int r = 0; r < restarts; ++r) {
            VertexSet s = detail::min_merge_fill(g, remaining, t, g.n(), rng);
            if (s.size() > best.size()) best = s;
        }
        for (int v : best) out.assignment[v] = col;
        ++col;
        std::vector<char> taken(g.n(), 0);
        for (int v : best) taken[v] = 1;
        remaining.erase(std::remove_if(remaining.begin(), remaining.end(),
                                       [&](int v) { return taken[v]; }),
                        remaining.end());
    }
    out.num_colors = col;
    return out;
}

struct GreedyColoringResult {
    Coloring coloring;
    int extracted_classes = 0;
    int tail_classes = 0;
    int target_k = 0;
    bool used_tail_fallback = false;
};

// The colouring procedure behind the medium-t upper bound: repeatedly
// extract a t-component subset of target order k (best of `restarts`
// min-merge greedy passes, accepting the largest found when k is out of
// reach), until the remainder drops below n/(log n)^2. The remainder is
// then split into arbitrary blocks of size <= t, which are t-component
// sets unconditionally; classes carry a tail flag so the fallback is
// visible in output.
inline GreedyColoringResult chi_t_greedy_extraction(const Graph& g, int t, int k, RngSeed seed,
                                                    int restarts = 8) {
    if (t < 1 || k < 1 || k > std::max(g.n(), 1))
        throw std::invalid_argument("chi_t_greedy_extraction: need t >= 1, 1 <= k <= n");
    GreedyColoringResult res;
    res.target_k = k;
    res.coloring.assignment.assign(g.n(), -1);
    if (g.n() == 0) return res;
    std::mt19937_64 rng(seed.seed);
    double logn = std::log(std::max<double>(g.n(), 3));
    double threshold = g.n() / (logn * logn);
    std::vector<int> remaining(g.n());
    std::iota(remaining.begin(), remaining.end(), 0);
    int col = 0;
    while (static_cast<double>(remaining.size()) >= threshold && !remaining.empty()) {
        VertexSet best;
        for (int r = 0; r < restarts && static_cast<int>(best.size()) < k; ++r) {
            VertexSet s = detail::min_merge_fill(g, remaining, t, k, rng);
            if (s.size() > best.size()) best = s;
        }
        for (int v : best) res.coloring.assignment[v] = col;
        ++col;
        ++res.extracted_classes;
        std::vector<char> taken(g.n(), 0);
        for (int v : best) taken[v] = 1;
        remaining.erase(std::remove_if(remaining.begin(), remaining.end(),
                                       [&](int v) { return taken[v]; }),
                        remaining.end());
    }
    // tail: blocks of size <= t are t-component sets for any graph
    for (std::size_t i = 0; i < remaining.size(); i += t) {
        for (std::size_t j = i; j < std::min(remaining.size(), i + t); ++j)
            res.coloring.assignment[remaining[j]] = col;
        ++col;
        ++res.tail_classes;
        res.used_tail_fallback = true;
    }
    res.coloring.num_colors = col;
    return res;
}

}  // namespace cclab
