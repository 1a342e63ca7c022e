#include "dblfgp/linearize.hpp"

#include <string>

namespace dblfgp {

MaximizerPoint maximizer_point(const FuzzyGoal& goal, const FractionalFunction& f,
                               std::span<const LinearConstraint> constraints,
                               const PayoffEntry* known) {
    const bool less = goal.direction == GoalDirection::LessType;
    if (known != nullptr) {
        return less ? MaximizerPoint{known->argmin, known->argminMultiple}
                    : MaximizerPoint{known->argmax, known->argmaxMultiple};
    }
    auto opt = optimize_fractional(f, constraints, less ? Sense::Min : Sense::Max);
    return {std::move(opt.x), opt.alternateOptima};
}

std::vector<double> gradient_fractional(const FractionalFunction& expr, std::span<const double> x) {
    const double d = expr.denominator(x);
    if (d <= kTol) {
        throw EvaluationError("denominator " + std::to_string(d) + " too small for a gradient");
    }
    const double n = expr.numerator(x);
    std::vector<double> grad(expr.dimension());
    for (std::size_t j = 0; j < grad.size(); ++j) {
        grad[j] = (d * expr.numerator.coeffs[j] - n * expr.denominator.coeffs[j]) / (d * d);
    }
    return grad;
}

AffineForm taylor_linearize(const FractionalFunction& expr, std::span<const double> point) {
    const auto grad = gradient_fractional(expr, point);
    AffineForm out;
    out.coeffs = grad;
    out.constant = evaluate(expr, point);
    for (std::size_t j = 0; j < grad.size(); ++j) out.constant -= grad[j] * point[j];
    return out;
}

std::vector<LinearizedMembership> linearize_goals(const DBLProblem& problem,
                                                  const std::vector<FuzzyGoal>& goals,
                                                  const PayoffTable* payoff) {
    std::vector<LinearizedMembership> out;
    out.reserve(goals.size());
    for (const auto& goal : goals) {
        const auto& f = problem.objective(goal.id).f;
        const PayoffEntry* known = payoff ? &payoff->entry(goal.id) : nullptr;
        auto point = maximizer_point(goal, f, problem.constraints, known);
        const auto expr = membership_expression(goal, f);
        LinearizedMembership lin{goal.id, point.x, taylor_linearize(expr, point.x), point.notUnique};
        out.push_back(std::move(lin));
    }
    return out;
}

}  // namespace dblfgp
