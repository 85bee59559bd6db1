// Shared deterministic generators and brute-force helpers for the test
// suites. Everything here is independent of the solver internals it is
// used to check.
#ifndef QRD_TESTS_SUPPORT_HPP
#define QRD_TESTS_SUPPORT_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "qrd/graph.hpp"
#include "qrd/labeling.hpp"

namespace qrd_test {

// xorshift64*; self-contained so runs are reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    bool chance(int num, int den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

inline qrd::Graph random_graph(Rng& rng, int n, int edge_percent) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_percent, 100)) edges.emplace_back(u, v);
    return qrd::Graph::from_edges(n, edges);
}

// Random spanning tree plus a sprinkle of extra edges.
inline qrd::Graph random_connected_graph(Rng& rng, int n, int extra_percent = 30) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool present = false;
            for (const auto& e : edges)
                present = present || (e.first == u && e.second == v) || (e.first == v && e.second == u);
            if (!present && rng.chance(extra_percent, 100)) edges.emplace_back(u, v);
        }
    return qrd::Graph::from_edges(n, edges);
}

// Built by the defining insertion process: each new vertex is added either
// isolated or universal; the last one universal, so the result is connected.
inline qrd::Graph random_connected_threshold_graph(Rng& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        bool universal = (v == n - 1) || rng.chance(1, 2);
        if (universal)
            for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
    }
    return qrd::Graph::from_edges(n, edges);
}

// Random connected graph with maximum degree <= 3: degree-capped random
// tree plus degree-capped extra edges.
inline qrd::Graph random_connected_maxdeg3(Rng& rng, int n) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int u = rng.below(v);
        for (int tries = 0; deg[static_cast<std::size_t>(u)] >= 3 && tries < 4 * n; ++tries)
            u = rng.below(v);
        if (deg[static_cast<std::size_t>(u)] >= 3)
            for (u = 0; deg[static_cast<std::size_t>(u)] >= 3; ++u) {}
        edges.emplace_back(u, v);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (deg[static_cast<std::size_t>(u)] >= 3 || deg[static_cast<std::size_t>(v)] >= 3) continue;
            bool present = false;
            for (const auto& e : edges)
                present = present || (e.first == u && e.second == v);
            if (!present && rng.chance(1, 5)) {
                edges.emplace_back(u, v);
                ++deg[static_cast<std::size_t>(u)];
                ++deg[static_cast<std::size_t>(v)];
            }
        }
    return qrd::Graph::from_edges(n, edges);
}

// Visits every labeled graph on n vertices (all 2^C(n,2) edge subsets).
inline void for_all_graphs(int n, const std::function<void(const qrd::Graph&)>& fn) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (1ULL << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask & (1ULL << i)) edges.push_back(slots[i]);
        fn(qrd::Graph::from_edges(n, edges));
    }
}

// Visits all 6^n labelings of an n-vertex graph.
inline void for_all_labelings(int n, const std::function<void(const qrd::Labeling&)>& fn) {
    std::vector<int> values(static_cast<std::size_t>(n), 0);
    while (true) {
        fn(qrd::Labeling(values));
        int i = 0;
        while (i < n && values[static_cast<std::size_t>(i)] == 5) values[static_cast<std::size_t>(i++)] = 0;
        if (i == n) return;
        ++values[static_cast<std::size_t>(i)];
    }
}

// A random valid 4RDF: start from 5s on a dominating superset, then try
// random weight-preserving or weight-raising mutations that keep validity.
inline qrd::Labeling random_valid_labeling(Rng& rng, const qrd::Graph& g) {
    qrd::Labeling f = qrd::Labeling::zeros(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (rng.chance(1, 2)) f[v] = 5;
    while (!qrd::is_valid_4rdf(g, f)) {
        auto rep = qrd::verify(g, f);
        f[rep.violations[static_cast<std::size_t>(rng.below(static_cast<int>(rep.violations.size())))].vertex] = 5;
    }
    for (int step = 0; step < 3 * g.n(); ++step) {
        int v = rng.below(g.n());
        int old = f[v];
        f[v] = rng.below(6);
        if (!qrd::is_valid_4rdf(g, f)) f[v] = old;
    }
    return f;
}

// Threshold graphs are exactly the {P4, C4, 2K2}-free graphs; checked by
// brute force over 4-subsets.
inline bool threshold_by_forbidden_subgraphs(const qrd::Graph& g) {
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b)
            for (int c = b + 1; c < g.n(); ++c)
                for (int d = c + 1; d < g.n(); ++d) {
                    int verts[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.has_edge(verts[i], verts[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (edges == 2) {  // 2K2 iff both edges disjoint: all degrees 1
                        bool all_one = deg[0] == 1 && deg[1] == 1 && deg[2] == 1 && deg[3] == 1;
                        if (all_one) return false;
                    }
                    if (edges == 3) {  // P4 iff degrees are 1,1,2,2 and connected (no triangle+isolate)
                        int ones = 0, twos = 0;
                        for (int i = 0; i < 4; ++i) {
                            ones += deg[i] == 1;
                            twos += deg[i] == 2;
                        }
                        if (ones == 2 && twos == 2) return false;
                    }
                    if (edges == 4) {  // C4 iff all degrees 2
                        bool all_two = deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2;
                        if (all_two) return false;
                    }
                }
    return true;
}

}  // namespace qrd_test

#endif  // QRD_TESTS_SUPPORT_HPP
