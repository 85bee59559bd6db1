#ifndef QRD_LABELING_HPP
#define QRD_LABELING_HPP

#include <array>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrd/graph.hpp"

namespace qrd {

/// A vertex labeling f : V -> {0,...,5}.
struct Labeling {
    std::vector<int> values;

    Labeling() = default;
    explicit Labeling(std::vector<int> v) : values(std::move(v)) {
        for (int x : values)
            if (x < 0 || x > 5) throw std::invalid_argument("label out of range [0,5]");
    }
    static Labeling zeros(int n) { return Labeling(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    int size() const { return static_cast<int>(values.size()); }
    int operator[](int v) const { return values[static_cast<std::size_t>(v)]; }
    int& operator[](int v) { return values[static_cast<std::size_t>(v)]; }
    bool operator==(const Labeling& o) const { return values == o.values; }
};

inline int weight(const Labeling& f) {
    return std::accumulate(f.values.begin(), f.values.end(), 0);
}

struct Violation {
    int vertex;
    int lhs;  // f(N[vertex])
    int rhs;  // |{nonzero neighbors}| + 4
    bool operator==(const Violation& o) const {
        return vertex == o.vertex && lhs == o.lhs && rhs == o.rhs;
    }
};

struct VerificationReport {
    bool valid = false;
    int weight = 0;
    std::vector<Violation> violations;
};

/// Checks the quadruple Roman domination condition: every vertex labeled
/// 0..3 must have closed-neighborhood label sum >= 4 plus its number of
/// nonzero-labeled neighbors. Labels 4 and 5 are exempt. All violations
/// are collected, never just the first.
inline VerificationReport verify(const Graph& g, const Labeling& f) {
    if (f.size() != g.n()) throw std::invalid_argument("labeling length does not match graph");
    VerificationReport rep;
    rep.weight = weight(f);
    for (int x = 0; x < g.n(); ++x) {
        if (f[x] > 3) continue;
        int lhs = f[x];
        int nonzero = 0;
        for (int y : g.neighbors(x)) {
            lhs += f[y];
            if (f[y] != 0) ++nonzero;
        }
        int rhs = nonzero + 4;
        if (lhs < rhs) rep.violations.push_back({x, lhs, rhs});
    }
    rep.valid = rep.violations.empty();
    return rep;
}

inline bool is_valid_4rdf(const Graph& g, const Labeling& f) { return verify(g, f).valid; }

/// The 6-tuple (V_0,...,V_5) view: V_i = { v : f(v) = i }.
inline std::array<std::vector<int>, 6> as_six_tuple(const Labeling& f) {
    std::array<std::vector<int>, 6> tuple;
    for (int v = 0; v < f.size(); ++v) tuple[static_cast<std::size_t>(f[v])].push_back(v);
    return tuple;
}

inline Labeling from_six_tuple(int n, const std::array<std::vector<int>, 6>& tuple) {
    std::vector<int> values(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < 6; ++i)
        for (int v : tuple[static_cast<std::size_t>(i)]) {
            if (v < 0 || v >= n || values[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("six-tuple is not a partition of the vertex set");
            values[static_cast<std::size_t>(v)] = i;
        }
    for (int x : values)
        if (x == -1) throw std::invalid_argument("six-tuple misses a vertex");
    return Labeling(std::move(values));
}

/// How far vertex v is from satisfying its condition; 0 for exempt vertices.
inline int deficiency(const Graph& g, const Labeling& f, int v) {
    if (f[v] > 3) return 0;
    int lhs = f[v];
    int nonzero = 0;
    for (int y : g.neighbors(v)) {
        lhs += f[y];
        if (f[y] != 0) ++nonzero;
    }
    return std::max(0, nonzero + 4 - lhs);
}

/// Accepts either a single line of n labels, or n "vertex label" pairs
/// (one per line, each vertex exactly once). With n tokens total the
/// single-line form is assumed.
inline Labeling parse_labeling(std::istream& in, int n) {
    std::vector<long long> tokens;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long x;
        while (ls >> x) tokens.push_back(x);
        if (!ls.eof()) throw parse_error("non-integer token in labeling", lineno);
    }
    auto check_label = [](long long x) {
        if (x < 0 || x > 5) throw parse_error("label " + std::to_string(x) + " out of range [0,5]");
        return static_cast<int>(x);
    };
    if (static_cast<int>(tokens.size()) == n) {
        std::vector<int> values;
        values.reserve(tokens.size());
        for (long long x : tokens) values.push_back(check_label(x));
        return Labeling(std::move(values));
    }
    if (static_cast<int>(tokens.size()) == 2 * n) {
        std::vector<int> values(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < tokens.size(); i += 2) {
            long long v = tokens[i];
            if (v < 0 || v >= n) throw parse_error("vertex id " + std::to_string(v) + " out of range");
            if (values[static_cast<std::size_t>(v)] != -1)
                throw parse_error("vertex " + std::to_string(v) + " labeled twice");
            values[static_cast<std::size_t>(v)] = check_label(tokens[i + 1]);
        }
        return Labeling(std::move(values));
    }
    throw parse_error("expected " + std::to_string(n) + " labels or " + std::to_string(n) +
                      " vertex/label pairs, got " + std::to_string(tokens.size()) + " tokens");
}

inline Labeling parse_labeling(const std::string& text, int n) {
    std::istringstream in(text);
    return parse_labeling(in, n);
}

/// Single-line form, the emitter's format.
inline std::string format_labeling(const Labeling& f) {
    std::ostringstream out;
    for (int v = 0; v < f.size(); ++v) out << (v ? " " : "") << f[v];
    out << '\n';
    return out.str();
}

}  // namespace qrd

#endif  // QRD_LABELING_HPP
