#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dblfgp/fractional.hpp"
#include "dblfgp/model.hpp"

namespace dblfgp {

class DegenerateGoalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GoalDirection {
    LessType,     // f <~ ideal; membership falls to 0 at the upper tolerance limit
    GreaterType,  // f >~ ideal; membership falls to 0 at the lower tolerance limit
};

struct FuzzyGoal {
    ObjectiveId id;
    std::string label;
    GoalDirection direction = GoalDirection::LessType;
    double ideal = 0.0;
    double toleranceLimit = 0.0;
    double weight = 1.0;

    /// 1 / |toleranceLimit - ideal|
    [[nodiscard]] double reciprocalWeight() const;

    friend bool operator==(const FuzzyGoal&, const FuzzyGoal&) = default;
};

/// Throws DegenerateGoalError for a zero-width tolerance interval, an
/// interval pointing the wrong way, or a nonpositive / non-finite weight.
void check_goal(const FuzzyGoal& goal);

/// Minimization objectives get LessType goals anchored at the payoff
/// minimum (ideal) and maximum (tolerance); maximization objectives the
/// mirror image. Weights are reciprocal tolerances.
std::vector<FuzzyGoal> default_goals(const PayoffTable& payoff);

/// Partial edits to a goal. A tolerance change without an explicit weight
/// recomputes the weight as the reciprocal tolerance.
struct GoalOverride {
    std::string label;
    std::optional<double> ideal;
    std::optional<double> toleranceLimit;
    std::optional<double> weight;

    friend bool operator==(const GoalOverride&, const GoalOverride&) = default;
};

FuzzyGoal apply_override(FuzzyGoal goal, const GoalOverride& edit);

/// Ideal values outside the attainable [min, max] range of the objective.
std::vector<std::string> goal_warnings(const std::vector<FuzzyGoal>& goals,
                                       const PayoffTable& payoff);

/// Clamped membership degree in [0, 1].
double membership_value(const FuzzyGoal& goal, double fval);

/// The membership degree as one unclamped rational function of x, sharing
/// f's denominator.
FractionalFunction membership_expression(const FuzzyGoal& goal, const FractionalFunction& f);

}  // namespace dblfgp
