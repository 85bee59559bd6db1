#ifndef QRD_SOLVE_HPP
#define QRD_SOLVE_HPP

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrd/labeling.hpp"

namespace qrd {

/// Raised when an instance exceeds a solver's size cap or a required exact
/// step is outside its budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SolveStatus { optimal, timeout, infeasible_budget };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::timeout: return "timeout";
        case SolveStatus::infeasible_budget: return "infeasible-budget";
    }
    return "?";
}

/// Limits for the branch-and-bound search. Leave a field at 0 for
/// "unlimited". Node limits make runs reproducible; time limits do not.
struct Budget {
    std::int64_t max_nodes = 0;
    std::chrono::milliseconds time_limit{0};
};

struct SolveReport {
    int optimum = 0;                 // gamma_4R or gamma; incumbent weight on timeout
    Labeling witness;                // 4RDF solvers
    std::vector<int> witness_set;    // domination solver
    std::int64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0};
    SolveStatus status = SolveStatus::optimal;
};

}  // namespace qrd

#endif  // QRD_SOLVE_HPP
