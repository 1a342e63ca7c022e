#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dblfgp/model.hpp"

namespace dblfgp {

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LinearProgram {
    Sense sense = Sense::Min;
    AffineForm objective;
    std::vector<LinearConstraint> constraints;
    /// Empty means all zero.
    std::vector<double> lowerBounds;
    /// Fixed variables are substituted out before pivoting, so their values
    /// come back exactly as given.
    std::vector<std::optional<double>> fixedValues;

    [[nodiscard]] std::size_t numVars() const { return objective.dimension(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus status);

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objectiveValue = 0.0;
    std::size_t pivotCount = 0;
    /// A nonbasic column had zero reduced cost at the optimum, i.e. the
    /// returned vertex is one of several optimal points.
    bool alternateOptima = false;
};

struct SolveOptions {
    std::size_t pivotCap = 10'000;
    /// Called with the sorted basic column set after every pivot.
    std::function<void(std::span<const std::size_t>)> onBasis;
};

/// Dense two-phase primal simplex with Bland's rule.
LpSolution solve_lp(const LinearProgram& lp, const SolveOptions& options = {});

}  // namespace dblfgp
