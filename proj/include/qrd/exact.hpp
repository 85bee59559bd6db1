#ifndef QRD_EXACT_HPP
#define QRD_EXACT_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "qrd/domination.hpp"
#include "qrd/graph.hpp"
#include "qrd/labeling.hpp"
#include "qrd/solve.hpp"

namespace qrd {

namespace detail {

// Exhaustive search in lexicographic label order. Prunes a branch when the
// partial weight already matches the incumbent or when a vertex whose
// closed neighborhood is fully labeled fails its condition; both prunes
// keep the first (hence lexicographically smallest) optimal witness.
struct BruteSearch {
    const Graph& g;
    std::vector<int> f;
    std::vector<int> last_nbhd_index;  // vertex u is finally checkable once this index is labeled
    std::vector<std::vector<int>> check_at;
    int best = -1;
    std::vector<int> best_f;
    std::int64_t nodes = 0;

    explicit BruteSearch(const Graph& g_) : g(g_), f(static_cast<std::size_t>(g_.n()), 0) {
        last_nbhd_index.resize(static_cast<std::size_t>(g.n()));
        check_at.resize(static_cast<std::size_t>(g.n()));
        for (int u = 0; u < g.n(); ++u) {
            int last = u;
            for (int w : g.neighbors(u)) last = std::max(last, w);
            last_nbhd_index[static_cast<std::size_t>(u)] = last;
            check_at[static_cast<std::size_t>(last)].push_back(u);
        }
    }

    bool final_check(int u) const {
        if (f[static_cast<std::size_t>(u)] > 3) return true;
        int lhs = f[static_cast<std::size_t>(u)];
        int nonzero = 0;
        for (int y : g.neighbors(u)) {
            int fy = f[static_cast<std::size_t>(y)];
            lhs += fy;
            if (fy != 0) ++nonzero;
        }
        return lhs >= nonzero + 4;
    }

    void descend(int v, int partial_weight) {
        ++nodes;
        if (best >= 0 && partial_weight >= best) return;
        if (v == g.n()) {
            best = partial_weight;
            best_f = f;
            return;
        }
        for (int label = 0; label <= 5; ++label) {
            f[static_cast<std::size_t>(v)] = label;
            bool ok = true;
            for (int u : check_at[static_cast<std::size_t>(v)])
                if (!final_check(u)) {
                    ok = false;
                    break;
                }
            if (ok) descend(v + 1, partial_weight + label);
        }
        f[static_cast<std::size_t>(v)] = 0;
    }
};

}  // namespace detail

/// Ground-truth oracle: minimum 4RDF weight over all 6^n labelings.
/// Returns the lexicographically smallest optimal witness.
inline SolveReport brute_force_4r(const Graph& g, int cap = 9) {
    if (g.n() > cap)
        throw budget_error("brute_force_4r: n=" + std::to_string(g.n()) + " exceeds cap " +
                           std::to_string(cap));
    auto start = std::chrono::steady_clock::now();
    detail::BruteSearch search(g);
    search.descend(0, 0);
    SolveReport rep;
    rep.optimum = search.best;
    rep.witness = Labeling(std::move(search.best_f));
    rep.nodes_explored = search.nodes;
    rep.elapsed = std::chrono::steady_clock::now() - start;
    rep.status = SolveStatus::optimal;
    return rep;
}

namespace detail {

struct BnbSearch {
    const Graph& g;
    std::vector<int> order;     // branching order: degree desc, id asc
    std::vector<int> f;         // -1 = unassigned
    std::vector<int> sum;       // assigned label sum over N[u]
    std::vector<int> anz;       // assigned nonzero neighbors of u
    std::vector<int> open;      // unassigned vertices in N[u]
    int assigned_weight = 0;
    int best;
    std::vector<int> best_f;
    std::int64_t nodes = 0;
    std::int64_t node_limit;    // 0 = unlimited
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
    bool stopped = false;

    BnbSearch(const Graph& g_, std::vector<int> incumbent, std::int64_t node_limit_,
              std::optional<std::chrono::steady_clock::time_point> deadline_)
        : g(g_),
          f(static_cast<std::size_t>(g_.n()), -1),
          sum(static_cast<std::size_t>(g_.n()), 0),
          anz(static_cast<std::size_t>(g_.n()), 0),
          open(static_cast<std::size_t>(g_.n()), 0),
          best_f(std::move(incumbent)),
          node_limit(node_limit_) {
        best = 0;
        for (int x : best_f) best += x;
        if (deadline_) {
            deadline = *deadline_;
            has_deadline = true;
        }
        order.resize(static_cast<std::size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v) order[static_cast<std::size_t>(v)] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        for (int v = 0; v < g.n(); ++v) open[static_cast<std::size_t>(v)] = 1 + g.degree(v);
    }

    bool out_of_budget() {
        if (node_limit > 0 && nodes >= node_limit) return true;
        if (has_deadline && (nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() >= deadline)
            return true;
        return false;
    }

    // Satisfiable even in the best case (all unlabeled members of N[u] at 5)?
    bool still_satisfiable(int u) const {
        auto ui = static_cast<std::size_t>(u);
        if (f[ui] < 0 || f[ui] > 3) return true;
        return sum[ui] + 4 * open[ui] >= 4 + anz[ui];
    }

    void assign(int v, int label) {
        auto vi = static_cast<std::size_t>(v);
        f[vi] = label;
        sum[vi] += label;
        --open[vi];
        for (int u : g.neighbors(v)) {
            auto ui = static_cast<std::size_t>(u);
            sum[ui] += label;
            --open[ui];
            if (label != 0) ++anz[ui];
        }
        assigned_weight += label;
    }

    void unassign(int v, int label) {
        auto vi = static_cast<std::size_t>(v);
        f[vi] = -1;
        sum[vi] -= label;
        ++open[vi];
        for (int u : g.neighbors(v)) {
            auto ui = static_cast<std::size_t>(u);
            sum[ui] -= label;
            ++open[ui];
            if (label != 0) --anz[ui];
        }
        assigned_weight -= label;
    }

    // Admissible lower bound: assigned weight plus demands of a greedily
    // packed family of pairwise disjoint closed neighborhoods. Every valid
    // completion has f(N[u]) >= 4 for any u, >= 4 + anz[u] when u is
    // already committed to a label <= 3, and never below the sum already
    // placed in N[u].
    int lower_bound() const {
        std::vector<std::pair<int, int>> gains;  // (gain, vertex)
        for (int u = 0; u < g.n(); ++u) {
            auto ui = static_cast<std::size_t>(u);
            int req;
            if (f[ui] == -1)
                req = 4;
            else if (f[ui] <= 3)
                req = 4 + anz[ui];
            else
                req = 0;
            int gain = req - sum[ui];
            if (gain > 0) gains.emplace_back(gain, u);
        }
        std::sort(gains.begin(), gains.end(),
                  [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first > b.first : a.second < b.second;
                  });
        std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
        int bound = assigned_weight;
        for (const auto& [gain, u] : gains) {
            bool free = !used[static_cast<std::size_t>(u)];
            for (int w : g.neighbors(u)) free = free && !used[static_cast<std::size_t>(w)];
            if (!free) continue;
            bound += gain;
            used[static_cast<std::size_t>(u)] = 1;
            for (int w : g.neighbors(u)) used[static_cast<std::size_t>(w)] = 1;
        }
        return bound;
    }

    void descend(int pos) {
        if (stopped) return;
        ++nodes;
        if (out_of_budget()) {
            stopped = true;
            return;
        }
        if (pos == g.n()) {
            // Incremental checks guarantee validity here.
            if (assigned_weight < best) {
                best = assigned_weight;
                best_f = f;
            }
            return;
        }
        if (lower_bound() >= best) return;
        int v = order[static_cast<std::size_t>(pos)];
        static constexpr int kLabelOrder[6] = {0, 5, 4, 3, 2, 1};
        for (int label : kLabelOrder) {
            assign(v, label);
            bool ok = still_satisfiable(v);
            if (ok)
                for (int u : g.neighbors(v))
                    if (!still_satisfiable(u)) {
                        ok = false;
                        break;
                    }
            if (ok) descend(pos + 1);
            unassign(v, label);
            if (stopped) return;
        }
    }
};

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                              std::vector<int>& index_of) {
    index_of.assign(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < verts.size(); ++i)
        index_of[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : verts)
        for (int w : g.neighbors(u))
            if (u < w && index_of[static_cast<std::size_t>(w)] != -1)
                edges.emplace_back(index_of[static_cast<std::size_t>(u)],
                                   index_of[static_cast<std::size_t>(w)]);
    return Graph::from_edges(static_cast<int>(verts.size()), edges);
}

}  // namespace detail

/// Exact gamma_4R via branch and bound: per-component decomposition,
/// degree-descending branching with labels tried in order 0,5,4,3,2,1,
/// greedy-domination incumbent, disjoint-neighborhood demand lower bound.
/// On budget exhaustion the report carries the best (always valid)
/// incumbent and status=timeout.
inline SolveReport branch_and_bound_4r(const Graph& g, Budget budget = {}) {
    auto start = std::chrono::steady_clock::now();
    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (budget.time_limit.count() > 0) deadline = start + budget.time_limit;

    SolveReport rep;
    rep.witness = Labeling::zeros(g.n());
    rep.status = SolveStatus::optimal;
    for (const auto& comp : g.components()) {
        std::vector<int> index_of;
        Graph sub = detail::induced_subgraph(g, comp, index_of);
        std::vector<int> incumbent(static_cast<std::size_t>(sub.n()), 0);
        for (int v : greedy_dominating_set(sub)) incumbent[static_cast<std::size_t>(v)] = 5;

        std::int64_t remaining_nodes = 0;
        if (budget.max_nodes > 0) {
            remaining_nodes = budget.max_nodes - rep.nodes_explored;
            if (remaining_nodes <= 0) remaining_nodes = -1;  // exhausted: keep incumbent
        }
        detail::BnbSearch search(sub, std::move(incumbent), std::max<std::int64_t>(remaining_nodes, 0),
                                 deadline);
        if (remaining_nodes >= 0)
            search.descend(0);
        else
            search.stopped = true;
        if (search.stopped) rep.status = SolveStatus::timeout;
        rep.optimum += search.best;
        rep.nodes_explored += search.nodes;
        for (std::size_t i = 0; i < comp.size(); ++i)
            rep.witness[comp[i]] = search.best_f[i];
    }
    rep.elapsed = std::chrono::steady_clock::now() - start;
    return rep;
}

}  // namespace qrd

#endif  // QRD_EXACT_HPP
