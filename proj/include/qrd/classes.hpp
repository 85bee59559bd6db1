#ifndef QRD_CLASSES_HPP
#define QRD_CLASSES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrd/domination.hpp"
#include "qrd/graph.hpp"
#include "qrd/labeling.hpp"

namespace qrd {

/// Split partition with nested neighborhoods: N[x_1] c= ... c= N[x_p] over
/// the clique, N(y_1) >= ... >= N(y_q) over the independent set.
struct ThresholdCertificate {
    std::vector<int> clique_order;
    std::vector<int> independent_order;
};

inline bool verify_threshold_certificate(const Graph& g, const ThresholdCertificate& cert) {
    const auto& c = cert.clique_order;
    const auto& i = cert.independent_order;
    if (static_cast<int>(c.size() + i.size()) != g.n()) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    for (int v : c) seen[static_cast<std::size_t>(v)]++;
    for (int v : i) seen[static_cast<std::size_t>(v)]++;
    for (char s : seen)
        if (s != 1) return false;

    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b)
            if (!g.has_edge(c[a], c[b])) return false;
    for (std::size_t a = 0; a < i.size(); ++a)
        for (std::size_t b = a + 1; b < i.size(); ++b)
            if (g.has_edge(i[a], i[b])) return false;

    auto closed = [&](int v) {
        std::vector<int> s = g.neighbors(v);
        s.push_back(v);
        std::sort(s.begin(), s.end());
        return s;
    };
    for (std::size_t a = 0; a + 1 < c.size(); ++a) {
        auto s1 = closed(c[a]), s2 = closed(c[a + 1]);
        if (!std::includes(s2.begin(), s2.end(), s1.begin(), s1.end())) return false;
    }
    for (std::size_t a = 0; a + 1 < i.size(); ++a) {
        const auto& s1 = g.neighbors(i[a]);
        const auto& s2 = g.neighbors(i[a + 1]);
        if (!std::includes(s1.begin(), s1.end(), s2.begin(), s2.end())) return false;
    }
    return true;
}

/// Threshold recognition by iterated stripping: remove a currently
/// isolated vertex when one exists, otherwise a currently universal one;
/// the graph is threshold iff this empties it. The strip order, reversed
/// per side, yields the certificate orderings.
inline std::optional<ThresholdCertificate> recognize_threshold(const Graph& g) {
    std::vector<char> alive(static_cast<std::size_t>(g.n()), 1);
    std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);

    std::vector<int> clique_stripped, independent_stripped;
    int remaining = g.n();
    while (remaining > 0) {
        int pick = -1;
        bool isolated = false;
        for (int v = 0; v < g.n() && pick == -1; ++v)
            if (alive[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == 0) {
                pick = v;
                isolated = true;
            }
        for (int v = 0; v < g.n() && pick == -1; ++v)
            if (alive[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == remaining - 1)
                pick = v;
        if (pick == -1) return std::nullopt;
        (isolated ? independent_stripped : clique_stripped).push_back(pick);
        alive[static_cast<std::size_t>(pick)] = 0;
        --remaining;
        for (int w : g.neighbors(pick))
            if (alive[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
    }
    ThresholdCertificate cert;
    cert.clique_order.assign(clique_stripped.rbegin(), clique_stripped.rend());
    cert.independent_order.assign(independent_stripped.rbegin(), independent_stripped.rend());
    if (!verify_threshold_certificate(g, cert))
        throw std::logic_error("threshold certificate failed re-verification");
    return cert;
}

/// Weight-5 optimal labeling for a connected threshold graph: 5 on x_p,
/// which is adjacent to every other vertex.
inline Labeling threshold_gamma4r(const Graph& g, const ThresholdCertificate& cert) {
    if (g.n() < 2) throw std::invalid_argument("threshold_gamma4r: needs at least 2 vertices");
    if (!g.is_connected()) throw std::invalid_argument("threshold_gamma4r: graph must be connected");
    if (cert.clique_order.empty() || !verify_threshold_certificate(g, cert))
        throw std::invalid_argument("threshold_gamma4r: invalid certificate");
    int xp = cert.clique_order.back();
    if (g.degree(xp) != g.n() - 1)
        throw std::invalid_argument("threshold_gamma4r: x_p is not universal");
    Labeling f = Labeling::zeros(g.n());
    f[xp] = 5;
    return f;
}

/// 4*gamma + 1 <= gamma_4R <= 5*gamma for efficient domination graphs.
struct EdsBounds {
    std::vector<int> eds;
    int gamma = 0;
    int lower = 0;
    int upper = 0;
};

inline std::optional<EdsBounds> eds_bounds(const Graph& g) {
    auto d = find_efficient_dominating_set(g);
    if (!d) return std::nullopt;
    EdsBounds b;
    b.eds = std::move(*d);
    b.gamma = static_cast<int>(b.eds.size());
    b.lower = 4 * b.gamma + 1;
    b.upper = 5 * b.gamma;
    return b;
}

/// 5 on the perfect code, 0 elsewhere; weight 5*gamma and always valid.
inline Labeling eds_upper_labeling(const Graph& g, const std::vector<int>& eds) {
    if (!is_efficient_dominating_set(g, eds))
        throw std::invalid_argument("eds_upper_labeling: set is not an efficient dominating set");
    Labeling f = Labeling::zeros(g.n());
    for (int v : eds) f[v] = 5;
    return f;
}

struct FamilyGraph {
    Graph graph;
    std::map<std::string, int> roles;
    Labeling witness;  // family F only; empty for F'
};

/// Family F: t copies of h each joined to its own apex x_i, a graph
/// gprime with universal vertex y, and a hub w joined to every copy
/// vertex and every gprime vertex. Achieves gamma_4R = 4*gamma + 1.
/// Numbering: copies of h first (copy i at offset i*|h|), then gprime,
/// then x_1..x_t, then w.
inline FamilyGraph build_family_f(int t, const Graph& h, const Graph& gprime, int y) {
    if (t < 2) throw std::invalid_argument("build_family_f: t must be >= 2");
    if (h.n() < 1) throw std::invalid_argument("build_family_f: h must be nonempty");
    if (y < 0 || y >= gprime.n() || gprime.degree(y) != gprime.n() - 1)
        throw std::invalid_argument("build_family_f: y must be a universal vertex of gprime");

    int copies_end = t * h.n();
    int gp_base = copies_end;
    int x_base = gp_base + gprime.n();
    int w = x_base + t;
    std::vector<std::pair<int, int>> edges;
    FamilyGraph out;
    for (int i = 0; i < t; ++i) {
        int base = i * h.n();
        for (const auto& [u, v] : h.edges()) edges.emplace_back(base + u, base + v);
        for (int v = 0; v < h.n(); ++v) {
            edges.emplace_back(x_base + i, base + v);
            edges.emplace_back(w, base + v);
            out.roles["h" + std::to_string(i + 1) + "_" + std::to_string(v)] = base + v;
        }
        out.roles["x" + std::to_string(i + 1)] = x_base + i;
    }
    for (const auto& [u, v] : gprime.edges()) edges.emplace_back(gp_base + u, gp_base + v);
    for (int v = 0; v < gprime.n(); ++v) {
        edges.emplace_back(w, gp_base + v);
        out.roles["gp_" + std::to_string(v)] = gp_base + v;
    }
    out.roles["y"] = gp_base + y;
    out.roles["w"] = w;
    out.graph = Graph::from_edges(w + 1, edges);

    out.witness = Labeling::zeros(out.graph.n());
    out.witness[w] = 5;
    for (int i = 0; i < t; ++i) out.witness[x_base + i] = 4;
    return out;
}

/// Family F': r >= 5 pendants on every vertex of g, every edge subdivided
/// by two vertices. The original vertex set is an efficient dominating
/// set and gamma_4R = 5*gamma. Numbering: originals 0..n-1, pendants
/// n + v*r + j, then two subdivision vertices per edge in edge order.
inline FamilyGraph build_family_fprime(const Graph& g, int r) {
    if (r < 5) throw std::invalid_argument("build_family_fprime: r must be >= 5");
    if (g.n() < 1) throw std::invalid_argument("build_family_fprime: g must be nonempty");
    FamilyGraph out;
    std::vector<std::pair<int, int>> edges;
    int pend_base = g.n();
    int sub_base = g.n() + g.n() * r;
    for (int v = 0; v < g.n(); ++v) {
        out.roles["v" + std::to_string(v)] = v;
        for (int j = 0; j < r; ++j) {
            int p = pend_base + v * r + j;
            edges.emplace_back(v, p);
            out.roles["p" + std::to_string(v) + "_" + std::to_string(j)] = p;
        }
    }
    auto ge = g.edges();
    for (std::size_t k = 0; k < ge.size(); ++k) {
        int a = sub_base + 2 * static_cast<int>(k);
        int b = a + 1;
        edges.emplace_back(ge[k].first, a);
        edges.emplace_back(a, b);
        edges.emplace_back(b, ge[k].second);
        out.roles["e" + std::to_string(k) + "_a"] = a;
        out.roles["e" + std::to_string(k) + "_b"] = b;
    }
    out.graph = Graph::from_edges(sub_base + 2 * g.m(), edges);
    return out;
}

}  // namespace qrd

#endif  // QRD_CLASSES_HPP
