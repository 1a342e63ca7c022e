#include "dblfgp/membership.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dblfgp {

double FuzzyGoal::reciprocalWeight() const { return 1.0 / std::abs(toleranceLimit - ideal); }

void check_goal(const FuzzyGoal& goal) {
    const std::string name = goal.label.empty() ? format_id(goal.id) : goal.label;
    if (!std::isfinite(goal.ideal) || !std::isfinite(goal.toleranceLimit)) {
        throw DegenerateGoalError("goal " + name + " has a non-finite parameter");
    }
    if (std::abs(goal.toleranceLimit - goal.ideal) <= kTol) {
        throw DegenerateGoalError("goal " + name + " has a zero-width tolerance interval");
    }
    const bool ordered = goal.direction == GoalDirection::LessType
                             ? goal.ideal < goal.toleranceLimit
                             : goal.toleranceLimit < goal.ideal;
    if (!ordered) {
        throw DegenerateGoalError("goal " + name +
                                  " has its tolerance limit on the wrong side of the ideal");
    }
    if (!(goal.weight > 0.0) || !std::isfinite(goal.weight)) {
        throw DegenerateGoalError("goal " + name + " needs a positive finite weight");
    }
}

std::vector<FuzzyGoal> default_goals(const PayoffTable& payoff) {
    std::vector<FuzzyGoal> goals;
    for (const auto& e : payoff.entries) {
        FuzzyGoal g;
        g.id = e.id;
        g.label = e.label;
        if (e.sense == Sense::Min) {
            g.direction = GoalDirection::LessType;
            g.ideal = e.minValue;
            g.toleranceLimit = e.maxValue;
        } else {
            g.direction = GoalDirection::GreaterType;
            g.ideal = e.maxValue;
            g.toleranceLimit = e.minValue;
        }
        if (std::abs(g.toleranceLimit - g.ideal) <= kTol) {
            throw DegenerateGoalError("objective " + e.label + " (" + format_id(e.id) +
                                      ") is constant over the feasible region");
        }
        g.weight = g.reciprocalWeight();
        goals.push_back(g);
    }
    return goals;
}

FuzzyGoal apply_override(FuzzyGoal goal, const GoalOverride& edit) {
    if (edit.ideal) goal.ideal = *edit.ideal;
    if (edit.toleranceLimit) goal.toleranceLimit = *edit.toleranceLimit;
    if (edit.weight) {
        goal.weight = *edit.weight;
    } else if (edit.ideal || edit.toleranceLimit) {
        goal.weight = goal.reciprocalWeight();
    }
    check_goal(goal);
    return goal;
}

std::vector<std::string> goal_warnings(const std::vector<FuzzyGoal>& goals,
                                       const PayoffTable& payoff) {
    std::vector<std::string> out;
    for (const auto& g : goals) {
        const auto& e = payoff.entry(g.id);
        if (g.ideal < e.minValue - 1e-6 || g.ideal > e.maxValue + 1e-6) {
            std::ostringstream os;
            os << "goal " << g.label << ": ideal " << g.ideal << " lies outside the attainable range ["
               << e.minValue << ", " << e.maxValue << "]";
            out.push_back(os.str());
        }
    }
    return out;
}

double membership_value(const FuzzyGoal& goal, double fval) {
    check_goal(goal);
    double mu = 0.0;
    if (goal.direction == GoalDirection::LessType) {
        if (fval <= goal.ideal) return 1.0;
        if (fval >= goal.toleranceLimit) return 0.0;
        mu = (goal.toleranceLimit - fval) / (goal.toleranceLimit - goal.ideal);
    } else {
        if (fval >= goal.ideal) return 1.0;
        if (fval <= goal.toleranceLimit) return 0.0;
        mu = (fval - goal.toleranceLimit) / (goal.ideal - goal.toleranceLimit);
    }
    return std::clamp(mu, 0.0, 1.0);
}

FractionalFunction membership_expression(const FuzzyGoal& goal, const FractionalFunction& f) {
    check_goal(goal);
    // LessType: (tol - N/D)/(tol - ideal) = (tol D - N) / ((tol - ideal) D)
    // GreaterType: (N/D - tol)/(ideal - tol) = (N - tol D) / ((ideal - tol) D)
    const double tol = goal.toleranceLimit;
    const double scale = goal.direction == GoalDirection::LessType ? 1.0 / (tol - goal.ideal)
                                                                   : 1.0 / (goal.ideal - tol);
    const double sign = goal.direction == GoalDirection::LessType ? 1.0 : -1.0;
    FractionalFunction out{f.numerator, f.denominator};
    for (std::size_t j = 0; j < f.dimension(); ++j) {
        out.numerator.coeffs[j] =
            sign * scale * (tol * f.denominator.coeffs[j] - f.numerator.coeffs[j]);
    }
    out.numerator.constant = sign * scale * (tol * f.denominator.constant - f.numerator.constant);
    return out;
}

}  // namespace dblfgp
