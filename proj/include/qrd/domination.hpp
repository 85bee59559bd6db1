#ifndef QRD_DOMINATION_HPP
#define QRD_DOMINATION_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "qrd/graph.hpp"
#include "qrd/solve.hpp"

namespace qrd {

/// True iff every vertex is in D or adjacent to a vertex of D.
inline bool dominates(const Graph& g, const std::vector<int>& d) {
    std::vector<char> covered(static_cast<std::size_t>(g.n()), 0);
    for (int v : d) {
        covered[static_cast<std::size_t>(v)] = 1;
        for (int w : g.neighbors(v)) covered[static_cast<std::size_t>(w)] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

/// Greedy set-cover heuristic over closed neighborhoods: repeatedly pick
/// the vertex covering the most still-uncovered vertices, ties broken by
/// smallest id.
inline std::vector<int> greedy_dominating_set(const Graph& g) {
    std::vector<char> covered(static_cast<std::size_t>(g.n()), 0);
    int remaining = g.n();
    std::vector<int> out;
    while (remaining > 0) {
        int best = -1, best_gain = -1;
        for (int v = 0; v < g.n(); ++v) {
            int gain = covered[static_cast<std::size_t>(v)] ? 0 : 1;
            for (int w : g.neighbors(v)) gain += covered[static_cast<std::size_t>(w)] ? 0 : 1;
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        out.push_back(best);
        auto mark = [&](int v) {
            if (!covered[static_cast<std::size_t>(v)]) {
                covered[static_cast<std::size_t>(v)] = 1;
                --remaining;
            }
        };
        mark(best);
        for (int w : g.neighbors(best)) mark(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

struct DomSearch {
    const Graph& g;
    int cover_cap;  // max vertices one pick can cover
    std::vector<int> best;
    std::vector<int> current;
    std::int64_t nodes = 0;

    explicit DomSearch(const Graph& g_) : g(g_), cover_cap(g_.max_degree() + 1) {}

    void run() {
        best = greedy_dominating_set(g);
        std::vector<char> covered(static_cast<std::size_t>(g.n()), 0);
        descend(covered, g.n());
    }

    void descend(std::vector<char>& covered, int uncovered) {
        ++nodes;
        if (uncovered == 0) {
            if (current.size() < best.size()) best = current;
            return;
        }
        // Every chosen vertex covers at most Delta+1 vertices.
        int lb = static_cast<int>(current.size()) + (uncovered + cover_cap - 1) / cover_cap;
        if (lb >= static_cast<int>(best.size())) return;

        // Branch on the uncovered vertex with the fewest potential dominators.
        int pick = -1, pick_opts = g.n() + 2;
        for (int v = 0; v < g.n(); ++v) {
            if (covered[static_cast<std::size_t>(v)]) continue;
            int opts = 1 + g.degree(v);
            if (opts < pick_opts) {
                pick_opts = opts;
                pick = v;
            }
        }
        std::vector<int> candidates{pick};
        for (int w : g.neighbors(pick)) candidates.push_back(w);
        std::sort(candidates.begin(), candidates.end());
        for (int u : candidates) {
            std::vector<int> newly;
            auto cover = [&](int x) {
                if (!covered[static_cast<std::size_t>(x)]) {
                    covered[static_cast<std::size_t>(x)] = 1;
                    newly.push_back(x);
                }
            };
            cover(u);
            for (int w : g.neighbors(u)) cover(w);
            current.push_back(u);
            descend(covered, uncovered - static_cast<int>(newly.size()));
            current.pop_back();
            for (int x : newly) covered[static_cast<std::size_t>(x)] = 0;
        }
    }
};

}  // namespace detail

/// Exact minimum dominating set by branch and bound.
inline SolveReport domination_number(const Graph& g, int cap = 20) {
    if (g.n() > cap)
        throw budget_error("domination_number: n=" + std::to_string(g.n()) + " exceeds cap " +
                           std::to_string(cap));
    auto start = std::chrono::steady_clock::now();
    detail::DomSearch search(g);
    search.run();
    SolveReport rep;
    rep.optimum = static_cast<int>(search.best.size());
    rep.witness_set = std::move(search.best);
    rep.nodes_explored = search.nodes;
    rep.elapsed = std::chrono::steady_clock::now() - start;
    rep.status = SolveStatus::optimal;
    return rep;
}

/// True iff the closed neighborhoods of D partition V(g): every vertex is
/// covered by exactly one member of D.
inline bool is_efficient_dominating_set(const Graph& g, const std::vector<int>& d) {
    std::vector<int> times(static_cast<std::size_t>(g.n()), 0);
    for (int v : d) {
        if (v < 0 || v >= g.n()) return false;
        ++times[static_cast<std::size_t>(v)];
        for (int w : g.neighbors(v)) ++times[static_cast<std::size_t>(w)];
    }
    return std::all_of(times.begin(), times.end(), [](int t) { return t == 1; });
}

namespace detail {

inline bool eds_descend(const Graph& g, std::vector<char>& covered, int uncovered,
                        std::vector<int>& current) {
    if (uncovered == 0) return true;
    int pick = -1;
    for (int v = 0; v < g.n(); ++v)
        if (!covered[static_cast<std::size_t>(v)]) {
            pick = v;
            break;
        }
    std::vector<int> candidates{pick};
    for (int w : g.neighbors(pick)) candidates.push_back(w);
    std::sort(candidates.begin(), candidates.end());
    for (int u : candidates) {
        bool clash = covered[static_cast<std::size_t>(u)];
        for (int w : g.neighbors(u)) clash = clash || covered[static_cast<std::size_t>(w)];
        if (clash) continue;  // would cover some vertex twice
        covered[static_cast<std::size_t>(u)] = 1;
        for (int w : g.neighbors(u)) covered[static_cast<std::size_t>(w)] = 1;
        current.push_back(u);
        if (eds_descend(g, covered, uncovered - 1 - g.degree(u), current)) return true;
        current.pop_back();
        covered[static_cast<std::size_t>(u)] = 0;
        for (int w : g.neighbors(u)) covered[static_cast<std::size_t>(w)] = 0;
    }
    return false;
}

}  // namespace detail

/// Exact-cover backtracking over closed neighborhoods; returns a perfect
/// code when one exists.
inline std::optional<std::vector<int>> find_efficient_dominating_set(const Graph& g) {
    std::vector<char> covered(static_cast<std::size_t>(g.n()), 0);
    std::vector<int> current;
    if (!detail::eds_descend(g, covered, g.n(), current)) return std::nullopt;
    std::sort(current.begin(), current.end());
    return current;
}

}  // namespace qrd

#endif  // QRD_DOMINATION_HPP
