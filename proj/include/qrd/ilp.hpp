#ifndef QRD_ILP_HPP
#define QRD_ILP_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrd/graph.hpp"
#include "qrd/labeling.hpp"

namespace qrd {

/// Binary indicator variables per vertex u: a_u..f_u flag labels 0..5.
/// Variable index of vertex u, label k is 6u+k.
struct IlpConstraint {
    std::string name;
    std::vector<std::pair<int, int>> terms;  // (variable index, coefficient), index ascending
    char sense = 'G';                        // 'G' for >=, 'L' for <=
    int rhs = 0;
};

struct IlpModel {
    int n = 0;
    std::vector<std::pair<int, int>> objective;  // minimized
    std::vector<IlpConstraint> constraints;

    int num_vars() const { return 6 * n; }
    static std::string var_name(int index) {
        static constexpr char kLetters[6] = {'a', 'b', 'c', 'd', 'e', 'f'};
        return std::string(1, kLetters[index % 6]) + "_" + std::to_string(index / 6);
    }
};

/// One coverage row and one uniqueness row per vertex. The coverage row is
/// the label condition with all variables moved left:
///   -a_u + c_u + 2 d_u + 7 e_u + 9 f_u
///     + sum over open neighbors v of (c_v + 2 d_v + 3 e_v + 4 f_v) >= 3.
inline IlpModel build_model(const Graph& g) {
    IlpModel m;
    m.n = g.n();
    for (int u = 0; u < g.n(); ++u) {
        for (int k = 1; k <= 5; ++k) m.objective.emplace_back(6 * u + k, k);
    }
    for (int u = 0; u < g.n(); ++u) {
        std::map<int, int> coef;
        // (1 - (a_u+b_u+c_u+d_u)) + 3 e_u + 4 f_u
        for (int k = 0; k <= 3; ++k) coef[6 * u + k] -= 1;
        coef[6 * u + 4] += 3;
        coef[6 * u + 5] += 4;
        // + sum_{v in N[u]} (b_v + 2c_v + 3d_v + 4e_v + 5f_v)
        auto add_closed = [&](int v) {
            for (int k = 1; k <= 5; ++k) coef[6 * v + k] += k;
        };
        add_closed(u);
        for (int v : g.neighbors(u)) add_closed(v);
        // >= 4 + sum_{v in N(u)} (b_v + c_v + d_v + e_v + f_v)
        for (int v : g.neighbors(u))
            for (int k = 1; k <= 5; ++k) coef[6 * v + k] -= 1;

        IlpConstraint cov;
        cov.name = "cov_" + std::to_string(u);
        cov.sense = 'G';
        cov.rhs = 3;  // the constant 1 moved across
        for (const auto& [var, c] : coef)
            if (c != 0) cov.terms.emplace_back(var, c);
        m.constraints.push_back(std::move(cov));
    }
    for (int u = 0; u < g.n(); ++u) {
        IlpConstraint uniq;
        uniq.name = "uniq_" + std::to_string(u);
        uniq.sense = 'L';
        uniq.rhs = 1;
        for (int k = 0; k <= 5; ++k) uniq.terms.emplace_back(6 * u + k, 1);
        m.constraints.push_back(std::move(uniq));
    }
    return m;
}

namespace detail {

inline void emit_terms(std::ostringstream& out, const std::vector<std::pair<int, int>>& terms) {
    bool first = true;
    for (const auto& [var, c] : terms) {
        if (first) {
            if (c < 0) out << "- ";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        int mag = c < 0 ? -c : c;
        if (mag != 1) out << mag << ' ';
        out << IlpModel::var_name(var);
    }
}

}  // namespace detail

/// CPLEX LP text format, deterministic variable order a_0..f_0, a_1, ...
inline std::string emit_lp(const IlpModel& m) {
    std::ostringstream out;
    out << "Minimize\n obj: ";
    detail::emit_terms(out, m.objective);
    out << "\nSubject To\n";
    for (const auto& c : m.constraints) {
        out << ' ' << c.name << ": ";
        detail::emit_terms(out, c.terms);
        out << (c.sense == 'G' ? " >= " : " <= ") << c.rhs << '\n';
    }
    out << "Binary\n";
    for (int i = 0; i < m.num_vars(); ++i) out << ' ' << IlpModel::var_name(i);
    out << "\nEnd\n";
    return out.str();
}

/// Sets exactly one indicator per vertex.
inline std::vector<int> encode_labeling(const Labeling& f) {
    std::vector<int> asg(static_cast<std::size_t>(6 * f.size()), 0);
    for (int v = 0; v < f.size(); ++v) asg[static_cast<std::size_t>(6 * v + f[v])] = 1;
    return asg;
}

/// Maps the set indicator back to its label; the all-zero pattern (allowed
/// by the <= 1 uniqueness rows) decodes to label 0.
inline Labeling decode_assignment(const Graph& g, const std::vector<int>& asg) {
    if (static_cast<int>(asg.size()) != 6 * g.n())
        throw std::invalid_argument("assignment length must be 6n");
    for (int x : asg)
        if (x != 0 && x != 1) throw std::invalid_argument("assignment must be binary");
    Labeling f = Labeling::zeros(g.n());
    for (int v = 0; v < g.n(); ++v) {
        int set_count = 0;
        for (int k = 0; k <= 5; ++k)
            if (asg[static_cast<std::size_t>(6 * v + k)]) {
                ++set_count;
                f[v] = k;
            }
        if (set_count > 1)
            throw std::invalid_argument("assignment sets two labels at vertex " + std::to_string(v));
    }
    return f;
}

inline bool satisfies(const IlpConstraint& c, const std::vector<int>& asg) {
    long long lhs = 0;
    for (const auto& [var, coef] : c.terms) lhs += static_cast<long long>(coef) * asg[static_cast<std::size_t>(var)];
    return c.sense == 'G' ? lhs >= c.rhs : lhs <= c.rhs;
}

inline bool satisfies_all(const IlpModel& m, const std::vector<int>& asg) {
    for (int x : asg)
        if (x != 0 && x != 1) return false;
    for (const auto& c : m.constraints)
        if (!satisfies(c, asg)) return false;
    return true;
}

inline long long objective_value(const IlpModel& m, const std::vector<int>& asg) {
    long long val = 0;
    for (const auto& [var, coef] : m.objective) val += static_cast<long long>(coef) * asg[static_cast<std::size_t>(var)];
    return val;
}

}  // namespace qrd

#endif  // QRD_ILP_HPP
