#ifndef TROPDEA_LP_HPP
#define TROPDEA_LP_HPP

#include <vector>

#include "tropdea/common.hpp"

namespace tropdea {

enum class Sense { Minimize, Maximize };
enum class Rel { Le, Eq, Ge };

struct LpConstraint {
    std::vector<double> a;
    Rel rel;
    double rhs;
};

/// Dense standard-form LP: optimize c.x subject to the rows, x >= 0.
struct LpProblem {
    Sense sense = Sense::Minimize;
    std::vector<double> c;
    std::vector<LpConstraint> rows;

    int num_vars() const { return static_cast<int>(c.size()); }
    LpProblem& add(std::vector<double> a, Rel rel, double rhs) {
        rows.push_back({std::move(a), rel, rhs});
        return *this;
    }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objective = 0.0;
    /// One multiplier per constraint, in the user's row order and sense:
    /// duals.b equals the primal objective on Optimal instances.
    std::vector<double> duals;
    int iterations = 0;
};

/// Two-phase dense primal simplex. Dantzig pricing with a Bland fallback
/// after 3(rows+cols) iterations; rows are rescaled internally so the
/// exponential-transform problems at large |alpha| stay pivotable.
LpSolution solve(const LpProblem& p);

} // namespace tropdea

#endif
