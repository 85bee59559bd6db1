#ifndef QRD_APPROX_HPP
#define QRD_APPROX_HPP

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qrd/domination.hpp"
#include "qrd/exact.hpp"
#include "qrd/graph.hpp"
#include "qrd/labeling.hpp"

namespace qrd {

struct ApproxReport {
    Labeling labeling;
    int weight = 0;
    double ratio_bound = 0.0;              // 5(1 + ln(Delta+1))
    std::optional<double> exact_ratio;     // weight / gamma_4R when the optimum is known
};

inline double qrd_ratio_bound(const Graph& g) {
    return 5.0 * (1.0 + std::log(static_cast<double>(g.max_degree()) + 1.0));
}

/// Label 5 on a greedy dominating set and 0 elsewhere; always a valid 4RDF.
inline ApproxReport qrd_approx(const Graph& g) {
    ApproxReport rep;
    rep.labeling = Labeling::zeros(g.n());
    for (int v : greedy_dominating_set(g)) rep.labeling[v] = 5;
    rep.weight = weight(rep.labeling);
    rep.ratio_bound = qrd_ratio_bound(g);
    return rep;
}

/// The pendant construction: one new leaf b_i attached to every original
/// vertex v_i. Original vertices keep their ids; pendant of v is n + v.
struct HGraph {
    Graph graph;
    std::vector<int> original;  // original[i] = id of v_i in graph
    std::vector<int> pendant;   // pendant[i] = id of b_i in graph
};

inline HGraph build_h_graph(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("build_h_graph: empty source graph");
    auto edges = g.edges();
    for (int v = 0; v < g.n(); ++v) edges.emplace_back(v, g.n() + v);
    HGraph h;
    h.graph = Graph::from_edges(2 * g.n(), edges);
    h.original.resize(static_cast<std::size_t>(g.n()));
    h.pendant.resize(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        h.original[static_cast<std::size_t>(v)] = v;
        h.pendant[static_cast<std::size_t>(v)] = g.n() + v;
    }
    return h;
}

/// Rewrites every (g(v_i)=0, g(b_i)=5) pendant pair to (5, 0). Weight and
/// validity are preserved.
inline Labeling normalize_pendant_labels(const HGraph& h, const Labeling& g4) {
    auto rep = verify(h.graph, g4);
    if (!rep.valid) throw std::invalid_argument("normalize_pendant_labels: input is not a valid 4RDF");
    Labeling out = g4;
    for (std::size_t i = 0; i < h.original.size(); ++i) {
        int vi = h.original[i], bi = h.pendant[i];
        if (out[bi] == 5 && out[vi] == 0) {
            out[vi] = 5;
            out[bi] = 0;
        }
    }
    return out;
}

/// T = { v_i : f(v_i) + f(b_i) >= 5 }; dominates the source graph for any
/// normalized valid 4RDF.
inline std::vector<int> extract_dominating_set(const HGraph& h, const Labeling& norm) {
    auto rep = verify(h.graph, norm);
    if (!rep.valid) throw std::invalid_argument("extract_dominating_set: labeling is not a valid 4RDF");
    std::vector<int> t;
    for (std::size_t i = 0; i < h.original.size(); ++i) {
        int vi = h.original[i], bi = h.pendant[i];
        if (norm[bi] == 5 && norm[vi] == 0)
            throw std::invalid_argument("extract_dominating_set: labeling is not normalized");
        if (norm[vi] + norm[bi] >= 5) t.push_back(static_cast<int>(i));
    }
    return t;
}

/// A solver handle produces a valid 4RDF of the given graph.
using QrdfSolver = std::function<Labeling(const Graph&)>;

inline QrdfSolver approx_backend() {
    return [](const Graph& g) { return qrd_approx(g).labeling; };
}

inline QrdfSolver exact_backend(Budget budget = {}) {
    return [budget](const Graph& g) { return branch_and_bound_4r(g, budget).witness; };
}

/// DS-Approx: return a minimum dominating set when one of size < k exists
/// (checked exactly, so the source graph must fit under dom_cap);
/// otherwise route through the pendant graph, normalize the backend's
/// 4RDF, and extract the dominated set.
inline std::vector<int> ds_approx(const Graph& g, int k, const QrdfSolver& backend,
                                  int dom_cap = 20) {
    if (k <= 0) throw std::invalid_argument("ds_approx: k must be positive");
    if (g.n() > dom_cap)
        throw budget_error("ds_approx: exact small-set check infeasible beyond cap " +
                           std::to_string(dom_cap));
    auto dom = domination_number(g, dom_cap);
    if (dom.optimum < k) return dom.witness_set;
    HGraph h = build_h_graph(g);
    Labeling norm = normalize_pendant_labels(h, backend(h.graph));
    return extract_dominating_set(h, norm);
}

}  // namespace qrd

#endif  // QRD_APPROX_HPP
