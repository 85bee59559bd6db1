#ifndef QRD_REDUCTIONS_HPP
#define QRD_REDUCTIONS_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <json.hpp>

#include "qrd/graph.hpp"
#include "qrd/labeling.hpp"

namespace qrd {

/// An EXACT-3-COVER instance: universe {0,...,3r-1} and a collection of
/// 3-element subsets.
struct EtcInstance {
    int r = 0;
    std::vector<std::array<int, 3>> sets;

    int universe_size() const { return 3 * r; }
    int s() const { return static_cast<int>(sets.size()); }

    void validate() const {
        if (r < 1) throw std::invalid_argument("ETC instance: r must be positive");
        for (const auto& set : sets) {
            for (int x : set)
                if (x < 0 || x >= universe_size())
                    throw std::invalid_argument("ETC instance: element out of range");
            if (set[0] == set[1] || set[0] == set[2] || set[1] == set[2])
                throw std::invalid_argument("ETC instance: set elements must be distinct");
        }
    }
};

inline EtcInstance parse_etc(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("ETC instance: ") + e.what());
    }
    EtcInstance inst;
    if (!j.is_object() || !j.contains("r") || !j.contains("sets"))
        throw parse_error("ETC instance: expected {\"r\": int, \"sets\": [[a,b,c],...]}");
    inst.r = j.at("r").get<int>();
    for (const auto& row : j.at("sets")) {
        if (!row.is_array() || row.size() != 3)
            throw parse_error("ETC instance: every set must have exactly 3 elements");
        inst.sets.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>()});
    }
    inst.validate();
    return inst;
}

inline std::string etc_to_json(const EtcInstance& inst) {
    nlohmann::json j;
    j["r"] = inst.r;
    j["sets"] = nlohmann::json::array();
    for (const auto& set : inst.sets) j["sets"].push_back({set[0], set[1], set[2]});
    return j.dump();
}

/// Independent check that the chosen set indices partition the universe.
inline bool is_exact_cover(const EtcInstance& inst, const std::vector<int>& cover) {
    std::vector<int> times(static_cast<std::size_t>(inst.universe_size()), 0);
    for (int j : cover) {
        if (j < 0 || j >= inst.s()) return false;
        for (int x : inst.sets[static_cast<std::size_t>(j)]) ++times[static_cast<std::size_t>(x)];
    }
    return std::all_of(times.begin(), times.end(), [](int t) { return t == 1; });
}

namespace detail {

inline bool etc_descend(const EtcInstance& inst, std::vector<char>& covered, int next,
                        std::vector<int>& chosen) {
    while (next < inst.universe_size() && covered[static_cast<std::size_t>(next)]) ++next;
    if (next == inst.universe_size()) return true;
    for (int j = 0; j < inst.s(); ++j) {
        const auto& set = inst.sets[static_cast<std::size_t>(j)];
        if (std::find(set.begin(), set.end(), next) == set.end()) continue;
        bool clash = false;
        for (int x : set) clash = clash || covered[static_cast<std::size_t>(x)];
        if (clash) continue;
        for (int x : set) covered[static_cast<std::size_t>(x)] = 1;
        chosen.push_back(j);
        if (etc_descend(inst, covered, next + 1, chosen)) return true;
        chosen.pop_back();
        for (int x : set) covered[static_cast<std::size_t>(x)] = 0;
    }
    return false;
}

}  // namespace detail

/// Exact backtracking ETC solver; returns set indices of a cover or none.
inline std::optional<std::vector<int>> solve_etc(const EtcInstance& inst) {
    inst.validate();
    std::vector<char> covered(static_cast<std::size_t>(inst.universe_size()), 0);
    std::vector<int> chosen;
    if (!detail::etc_descend(inst, covered, 0, chosen)) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

enum class GadgetKind { star, comb, split, planar };

inline const char* to_string(GadgetKind k) {
    switch (k) {
        case GadgetKind::star: return "star";
        case GadgetKind::comb: return "comb";
        case GadgetKind::split: return "split";
        case GadgetKind::planar: return "planar";
    }
    return "?";
}

/// A reduction output: graph, role names for every vertex, the decision
/// threshold l when the construction defines one, and the structures the
/// per-kind certificates run against.
struct GadgetGraph {
    Graph graph;
    std::map<std::string, int> roles;  // bijection name -> vertex id
    std::optional<int> threshold;
    GadgetKind kind = GadgetKind::star;
    std::vector<int> convexity_part;     // bipartition side P (star/comb)
    std::optional<Graph> convexity_tree; // spanning tree on P certified against
    std::optional<bool> planar_verdict;  // planar incidence gadget only
};

inline bool is_clique(const Graph& g, const std::vector<int>& verts) {
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (!g.has_edge(verts[a], verts[b])) return false;
    return true;
}

inline bool is_independent_set(const Graph& g, const std::vector<int>& verts) {
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b])) return false;
    return true;
}

/// True iff every vertex outside P has a neighborhood inducing a connected
/// subgraph of the given spanning tree of P. Throws when the tree does not
/// span P or an edge of g joins two P-vertices or two non-P vertices.
inline bool check_tree_convexity(const Graph& g, const std::vector<int>& partP, const Graph& tree) {
    if (tree.n() != g.n()) throw std::invalid_argument("tree must share the gadget vertex ids");
    std::vector<char> in_p(static_cast<std::size_t>(g.n()), 0);
    for (int v : partP) in_p[static_cast<std::size_t>(v)] = 1;
    for (const auto& [u, v] : g.edges())
        if (in_p[static_cast<std::size_t>(u)] == in_p[static_cast<std::size_t>(v)])
            throw std::invalid_argument("graph is not bipartite with part P");
    int tree_edges = 0;
    for (const auto& [u, v] : tree.edges()) {
        if (!in_p[static_cast<std::size_t>(u)] || !in_p[static_cast<std::size_t>(v)])
            throw std::invalid_argument("tree has an edge outside P");
        ++tree_edges;
    }
    if (tree_edges != static_cast<int>(partP.size()) - 1)
        throw std::invalid_argument("tree does not span P");
    // connectivity of the tree on P
    {
        std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
        std::vector<int> stack{partP.at(0)};
        seen[static_cast<std::size_t>(partP.at(0))] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++reached;
            for (int w : tree.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        if (reached != static_cast<int>(partP.size()))
            throw std::invalid_argument("tree does not span P");
    }

    for (int v = 0; v < g.n(); ++v) {
        if (in_p[static_cast<std::size_t>(v)]) continue;
        const auto& nb = g.neighbors(v);
        if (nb.size() <= 1) continue;
        std::vector<char> in_nb(static_cast<std::size_t>(g.n()), 0);
        for (int w : nb) in_nb[static_cast<std::size_t>(w)] = 1;
        std::vector<int> stack{nb[0]};
        std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
        seen[static_cast<std::size_t>(nb[0])] = 1;
        std::size_t reached = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++reached;
            for (int w : tree.neighbors(x))
                if (in_nb[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        if (reached != nb.size()) return false;
    }
    return true;
}

namespace detail {

// Fixed vertex numbering shared by gadget builders and witness builders.
struct StarLayout {
    int r, s;
    explicit StarLayout(const EtcInstance& inst) : r(inst.r), s(inst.s()) {}
    int b() const { return 0; }
    int bi(int i) const { return 1 + i; }                   // i in [0, 14r+6)
    int num_bi() const { return 14 * r + 6; }
    int cset(int j) const { return 1 + num_bi() + j; }      // j in [0, s)
    int x(int i) const { return 1 + num_bi() + s + i; }     // i in [0, 3r)
    int y(int i) const { return 1 + num_bi() + s + 3 * r + i; }
    int total() const { return 1 + num_bi() + s + 6 * r; }
};

struct CombLayout {
    int r, s;
    explicit CombLayout(const EtcInstance& inst) : r(inst.r), s(inst.s()) {}
    int b() const { return 0; }
    int bprime() const { return 1; }
    int bi(int i) const { return 2 + i; }                   // i in [0, 26r+6)
    int num_bi() const { return 26 * r + 6; }
    int cset(int j) const { return 2 + num_bi() + j; }
    int x(int i) const { return 2 + num_bi() + s + i; }
    int y(int i) const { return 2 + num_bi() + s + 3 * r + i; }
    int xprime(int i) const { return 2 + num_bi() + s + 6 * r + i; }
    int yprime(int i) const { return 2 + num_bi() + s + 9 * r + i; }
    int total() const { return 2 + num_bi() + s + 12 * r; }
};

struct SplitLayout {
    int r, s;
    explicit SplitLayout(const EtcInstance& inst) : r(inst.r), s(inst.s()) {}
    int cset(int j) const { return j; }
    int x(int i) const { return s + i; }
    int total() const { return s + 3 * r; }
};

inline void require_cover(const EtcInstance& inst, const std::vector<int>& cover) {
    if (!is_exact_cover(inst, cover))
        throw std::invalid_argument("witness requires a valid exact cover");
}

}  // namespace detail

/// Star convex bipartite gadget G_{r,s}: a star of 14r+6 leaves b_i plus
/// the sets C_j around hub b, membership edges x_i C_j, and pendants y_i.
/// Decision threshold 14r+5.
inline GadgetGraph build_star_convex(const EtcInstance& inst) {
    inst.validate();
    detail::StarLayout L(inst);
    GadgetGraph gg;
    gg.kind = GadgetKind::star;
    gg.threshold = 14 * inst.r + 5;
    std::vector<std::pair<int, int>> edges, tree_edges;
    gg.roles["b"] = L.b();
    for (int i = 0; i < L.num_bi(); ++i) {
        edges.emplace_back(L.b(), L.bi(i));
        gg.roles["b" + std::to_string(i + 1)] = L.bi(i);
    }
    for (int j = 0; j < L.s; ++j) {
        edges.emplace_back(L.b(), L.cset(j));
        gg.roles["C" + std::to_string(j + 1)] = L.cset(j);
    }
    for (int i = 0; i < 3 * inst.r; ++i) {
        edges.emplace_back(L.x(i), L.y(i));
        gg.roles["x" + std::to_string(i + 1)] = L.x(i);
        gg.roles["y" + std::to_string(i + 1)] = L.y(i);
        gg.convexity_part.push_back(L.x(i));
        tree_edges.emplace_back(L.b(), L.x(i));
    }
    gg.convexity_part.push_back(L.b());
    std::sort(gg.convexity_part.begin(), gg.convexity_part.end());
    for (int j = 0; j < L.s; ++j)
        for (int x : inst.sets[static_cast<std::size_t>(j)]) edges.emplace_back(L.x(x), L.cset(j));
    gg.graph = Graph::from_edges(L.total(), edges);
    gg.convexity_tree = Graph::from_edges(L.total(), tree_edges);
    return gg;
}

/// The weight-(14r+5) labeling from a positive ETC solution: 5 on b, 4 on
/// every y_i, 2 on the chosen sets.
inline Labeling star_witness(const EtcInstance& inst, const std::vector<int>& cover) {
    detail::require_cover(inst, cover);
    detail::StarLayout L(inst);
    Labeling f = Labeling::zeros(L.total());
    f[L.b()] = 5;
    for (int i = 0; i < 3 * inst.r; ++i) f[L.y(i)] = 4;
    for (int j : cover) f[L.cset(j)] = 2;
    return f;
}

/// Comb convex bipartite gadget H_{r,s} (needs r >= 4): hubs b, b' over
/// the sets, 26r+6 leaves b_i, pendant pairs (x_i,y_i) and (x'_i,y'_i),
/// and a complete join between sets and all x'_i. Threshold 26r+5.
inline GadgetGraph build_comb_convex(const EtcInstance& inst) {
    inst.validate();
    if (inst.r < 4) throw std::invalid_argument("comb gadget requires r >= 4");
    detail::CombLayout L(inst);
    GadgetGraph gg;
    gg.kind = GadgetKind::comb;
    gg.threshold = 26 * inst.r + 5;
    std::vector<std::pair<int, int>> edges, tree_edges;
    gg.roles["b"] = L.b();
    gg.roles["b'"] = L.bprime();
    for (int i = 0; i < L.num_bi(); ++i) {
        edges.emplace_back(L.b(), L.bi(i));
        gg.roles["b" + std::to_string(i + 1)] = L.bi(i);
    }
    for (int j = 0; j < L.s; ++j) {
        edges.emplace_back(L.b(), L.cset(j));
        edges.emplace_back(L.bprime(), L.cset(j));
        gg.roles["C" + std::to_string(j + 1)] = L.cset(j);
    }
    for (int i = 0; i < 3 * inst.r; ++i) {
        edges.emplace_back(L.x(i), L.y(i));
        edges.emplace_back(L.xprime(i), L.yprime(i));
        gg.roles["x" + std::to_string(i + 1)] = L.x(i);
        gg.roles["y" + std::to_string(i + 1)] = L.y(i);
        gg.roles["x'" + std::to_string(i + 1)] = L.xprime(i);
        gg.roles["y'" + std::to_string(i + 1)] = L.yprime(i);
        for (int j = 0; j < L.s; ++j) edges.emplace_back(L.cset(j), L.xprime(i));
    }
    for (int j = 0; j < L.s; ++j)
        for (int x : inst.sets[static_cast<std::size_t>(j)]) edges.emplace_back(L.x(x), L.cset(j));

    // Comb on P: spine b, x'_1, ..., x'_3r; pendant b' on b and x_i on x'_i.
    tree_edges.emplace_back(L.b(), L.bprime());
    tree_edges.emplace_back(L.b(), L.xprime(0));
    for (int i = 0; i < 3 * inst.r; ++i) {
        if (i + 1 < 3 * inst.r) tree_edges.emplace_back(L.xprime(i), L.xprime(i + 1));
        tree_edges.emplace_back(L.xprime(i), L.x(i));
        gg.convexity_part.push_back(L.x(i));
        gg.convexity_part.push_back(L.xprime(i));
    }
    gg.convexity_part.push_back(L.b());
    gg.convexity_part.push_back(L.bprime());
    std::sort(gg.convexity_part.begin(), gg.convexity_part.end());
    gg.graph = Graph::from_edges(L.total(), edges);
    gg.convexity_tree = Graph::from_edges(L.total(), tree_edges);
    return gg;
}

/// The weight-(26r+5) labeling from a positive ETC solution.
inline Labeling comb_witness(const EtcInstance& inst, const std::vector<int>& cover) {
    if (inst.r < 4) throw std::invalid_argument("comb gadget requires r >= 4");
    detail::require_cover(inst, cover);
    detail::CombLayout L(inst);
    Labeling f = Labeling::zeros(L.total());
    f[L.b()] = 5;
    for (int i = 0; i < 3 * inst.r; ++i) {
        f[L.y(i)] = 4;
        f[L.yprime(i)] = 4;
    }
    for (int j : cover) f[L.cset(j)] = 2;
    return f;
}

/// Split gadget: clique on the sets, independent set on the elements,
/// membership edges. Threshold 5r.
inline GadgetGraph build_split(const EtcInstance& inst) {
    inst.validate();
    detail::SplitLayout L(inst);
    GadgetGraph gg;
    gg.kind = GadgetKind::split;
    gg.threshold = 5 * inst.r;
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < L.s; ++j) {
        gg.roles["C" + std::to_string(j + 1)] = L.cset(j);
        for (int k = j + 1; k < L.s; ++k) edges.emplace_back(L.cset(j), L.cset(k));
        for (int x : inst.sets[static_cast<std::size_t>(j)]) edges.emplace_back(L.x(x), L.cset(j));
    }
    for (int i = 0; i < 3 * inst.r; ++i) gg.roles["x" + std::to_string(i + 1)] = L.x(i);
    gg.graph = Graph::from_edges(L.total(), edges);
    return gg;
}

/// The weight-5r labeling: 5 on the chosen sets, 0 elsewhere.
inline Labeling split_witness(const EtcInstance& inst, const std::vector<int>& cover) {
    detail::require_cover(inst, cover);
    detail::SplitLayout L(inst);
    Labeling f = Labeling::zeros(L.total());
    for (int j : cover) f[L.cset(j)] = 5;
    return f;
}

/// Reads an exact cover off a weight-<=5r 4RDF of the split gadget: the
/// sets labeled 5. Returns none when those sets do not form a cover.
inline std::optional<std::vector<int>> extract_cover_from_split(const GadgetGraph& gg,
                                                                const Labeling& f,
                                                                const EtcInstance& inst) {
    if (gg.kind != GadgetKind::split)
        throw std::invalid_argument("extract_cover_from_split: not a split gadget");
    auto rep = verify(gg.graph, f);
    if (!rep.valid || rep.weight > 5 * inst.r)
        throw std::invalid_argument("extract_cover_from_split: labeling must be a valid 4RDF of weight <= 5r");
    detail::SplitLayout L(inst);
    std::vector<int> cover;
    for (int j = 0; j < L.s; ++j)
        if (f[L.cset(j)] == 5) cover.push_back(j);
    if (!is_exact_cover(inst, cover)) return std::nullopt;
    return cover;
}

/// The element-set incidence graph of the instance. No decision threshold
/// is attached; the planarity verdict is recorded instead.
inline GadgetGraph build_petc_graph(const EtcInstance& inst) {
    inst.validate();
    int s = inst.s();
    GadgetGraph gg;
    gg.kind = GadgetKind::planar;
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < s; ++j) {
        gg.roles["C" + std::to_string(j + 1)] = j;
        for (int x : inst.sets[static_cast<std::size_t>(j)]) edges.emplace_back(s + x, j);
    }
    for (int i = 0; i < 3 * inst.r; ++i) gg.roles["x" + std::to_string(i + 1)] = s + i;
    gg.graph = Graph::from_edges(s + 3 * inst.r, edges);

    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> bg(
        static_cast<std::size_t>(gg.graph.n()));
    for (const auto& [u, v] : gg.graph.edges())
        boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
    gg.planar_verdict = boost::boyer_myrvold_planarity_test(bg);
    return gg;
}

}  // namespace qrd

#endif  // QRD_REDUCTIONS_HPP
