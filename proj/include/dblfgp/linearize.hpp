#pragma once

#include <span>
#include <vector>

#include "dblfgp/fractional.hpp"
#include "dblfgp/membership.hpp"
#include "dblfgp/model.hpp"

namespace dblfgp {

struct LinearizedMembership {
    ObjectiveId id;
    std::vector<double> expansionPoint;
    AffineForm affine;
    /// The objective's individual optimum is attained on a face, so the
    /// expansion point is one of several candidates.
    bool pointNotUnique = false;

    friend bool operator==(const LinearizedMembership&, const LinearizedMembership&) = default;
};

struct MaximizerPoint {
    std::vector<double> x;
    bool notUnique = false;
};

/// Point maximizing the membership of `goal`: the individual minimizer of f
/// for LessType goals, the maximizer for GreaterType. Reuses the payoff
/// entry when one is given.
MaximizerPoint maximizer_point(const FuzzyGoal& goal, const FractionalFunction& f,
                               std::span<const LinearConstraint> constraints,
                               const PayoffEntry* known = nullptr);

/// Quotient rule: (D grad N - N grad D) / D^2.
std::vector<double> gradient_fractional(const FractionalFunction& expr, std::span<const double> x);

/// expr(p) + grad expr(p) . (x - p), folded into one affine form.
AffineForm taylor_linearize(const FractionalFunction& expr, std::span<const double> point);

/// Linearized membership of every goal, expanded around its maximizer.
std::vector<LinearizedMembership> linearize_goals(const DBLProblem& problem,
                                                  const std::vector<FuzzyGoal>& goals,
                                                  const PayoffTable* payoff = nullptr);

}  // namespace dblfgp
