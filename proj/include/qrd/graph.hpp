#ifndef QRD_GRAPH_HPP
#define QRD_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qrd {

// Thrown on malformed text input; carries a 1-based line number when known.
struct parse_error : std::runtime_error {
    int line;
    parse_error(const std::string& what, int line_ = 0)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what : what),
          line(line_) {}
};

/// Simple undirected graph with dense 0-based vertex ids.
/// Adjacency lists are kept sorted; no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<std::size_t>(n), {});
        for (const auto& [u, v] : edges) g.add_edge_unchecked(u, v);
        g.finalize();
        return g;
    }

    int n() const { return n_; }
    int m() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        const auto& a = neighbors(u);
        return std::binary_search(a.begin(), a.end(), v);
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    std::vector<std::vector<int>> components() const {
        std::vector<int> comp(static_cast<std::size_t>(n_), -1);
        std::vector<std::vector<int>> out;
        for (int s = 0; s < n_; ++s) {
            if (comp[static_cast<std::size_t>(s)] != -1) continue;
            std::vector<int> stack{s}, verts;
            comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                verts.push_back(v);
                for (int w : neighbors(v))
                    if (comp[static_cast<std::size_t>(w)] == -1) {
                        comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
                        stack.push_back(w);
                    }
            }
            std::sort(verts.begin(), verts.end());
            out.push_back(std::move(verts));
        }
        return out;
    }

    bool is_connected() const { return n_ <= 1 || components().size() == 1; }

    /// Returns the two color classes iff the graph has no odd cycle.
    std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition() const {
        std::vector<int> color(static_cast<std::size_t>(n_), -1);
        for (int s = 0; s < n_; ++s) {
            if (color[static_cast<std::size_t>(s)] != -1) continue;
            color[static_cast<std::size_t>(s)] = 0;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : neighbors(v)) {
                    auto& cw = color[static_cast<std::size_t>(w)];
                    if (cw == -1) {
                        cw = 1 - color[static_cast<std::size_t>(v)];
                        stack.push_back(w);
                    } else if (cw == color[static_cast<std::size_t>(v)]) {
                        return std::nullopt;
                    }
                }
            }
        }
        std::pair<std::vector<int>, std::vector<int>> parts;
        for (int v = 0; v < n_; ++v)
            (color[static_cast<std::size_t>(v)] == 0 ? parts.first : parts.second).push_back(v);
        return parts;
    }

    /// Edges with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    void add_edge_unchecked(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("vertex id out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }

    void finalize() {
        m_ = 0;
        for (auto& a : adj_) {
            std::sort(a.begin(), a.end());
            if (std::adjacent_find(a.begin(), a.end()) != a.end())
                throw std::invalid_argument("duplicate edge");
            m_ += static_cast<int>(a.size());
        }
        m_ /= 2;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Text format: header "n m", then m lines "u v"; '#' starts a comment.
inline Graph parse_graph(std::istream& in) {
    auto next_line = [&in](std::string& line, int& lineno) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        return false;
    };

    std::string line;
    int lineno = 0;
    if (!next_line(line, lineno)) throw parse_error("missing header", lineno);
    std::istringstream hs(line);
    long long n = 0, m = 0;
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0)
        throw parse_error("malformed header, expected \"n m\"", lineno);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(line, lineno)) throw parse_error("expected " + std::to_string(m) + " edges, got " + std::to_string(i), lineno);
        std::istringstream es(line);
        long long u = 0, v = 0;
        if (!(es >> u >> v) || (es >> extra))
            throw parse_error("malformed edge, expected \"u v\"", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("vertex id out of range", lineno);
        if (u == v) throw parse_error("self-loop", lineno);
        for (const auto& e : edges)
            if ((e.first == u && e.second == v) || (e.first == v && e.second == u))
                throw parse_error("duplicate edge", lineno);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line(line, lineno)) throw parse_error("trailing content after edge list", lineno);
    return Graph::from_edges(static_cast<int>(n), edges);
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

enum class GraphKind { path, cycle, star, comb, complete, complete_bipartite };

inline std::optional<GraphKind> graph_kind_from_name(const std::string& name) {
    if (name == "path") return GraphKind::path;
    if (name == "cycle") return GraphKind::cycle;
    if (name == "star") return GraphKind::star;
    if (name == "comb") return GraphKind::comb;
    if (name == "complete") return GraphKind::complete;
    if (name == "complete_bipartite") return GraphKind::complete_bipartite;
    return std::nullopt;
}

/// Named graph families with deterministic vertex numbering:
///   path [k]: 0-1-...-(k-1)            cycle [k]: 0-1-...-(k-1)-0
///   star [k]: center 0, leaves 1..k    complete [k]: K_k
///   comb [k]: path 0..k-1, pendant k+i attached to path vertex i
///   complete_bipartite [a,b]: parts {0..a-1} and {a..a+b-1}
inline Graph generate(GraphKind kind, const std::vector<int>& params) {
    auto need = [&params](std::size_t count) {
        if (params.size() != count) throw std::invalid_argument("wrong parameter count");
    };
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
        case GraphKind::path: {
            need(1);
            int k = params[0];
            if (k < 1) throw std::invalid_argument("path needs length >= 1");
            for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
            return Graph::from_edges(k, edges);
        }
        case GraphKind::cycle: {
            need(1);
            int k = params[0];
            if (k < 3) throw std::invalid_argument("cycle needs length >= 3");
            for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
            return Graph::from_edges(k, edges);
        }
        case GraphKind::star: {
            need(1);
            int k = params[0];
            if (k < 1) throw std::invalid_argument("star needs >= 1 leaf");
            for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
            return Graph::from_edges(k + 1, edges);
        }
        case GraphKind::comb: {
            need(1);
            int k = params[0];
            if (k < 2) throw std::invalid_argument("comb needs path length >= 2");
            for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
            for (int i = 0; i < k; ++i) edges.emplace_back(i, k + i);
            return Graph::from_edges(2 * k, edges);
        }
        case GraphKind::complete: {
            need(1);
            int k = params[0];
            if (k < 1) throw std::invalid_argument("complete needs >= 1 vertex");
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
            return Graph::from_edges(k, edges);
        }
        case GraphKind::complete_bipartite: {
            need(2);
            int a = params[0], b = params[1];
            if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite needs parts >= 1");
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
            return Graph::from_edges(a + b, edges);
        }
    }
    throw std::invalid_argument("unknown graph kind");
}

}  // namespace qrd

#endif  // QRD_GRAPH_HPP
