#include "dblfgp/fgp_models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace dblfgp {

const char* to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::UpperLevel: return "upper-level";
        case ModelKind::FullHierarchy: return "full-hierarchy";
        case ModelKind::WeightedSum: return "weighted-sum";
    }
    return "unknown";
}

namespace {

std::size_t decision_dimension(std::span<const LinearizedMembership> lins,
                               std::span<const LinearConstraint> constraints) {
    if (!lins.empty()) return lins.front().affine.dimension();
    if (!constraints.empty()) return constraints.front().coeffs.size();
    throw ModelError("cannot infer the number of decision variables");
}

const LinearizedMembership& find_lin(std::span<const LinearizedMembership> lins,
                                     const ObjectiveId& id) {
    auto it = std::find_if(lins.begin(), lins.end(),
                           [&](const LinearizedMembership& l) { return l.id == id; });
    if (it == lins.end()) throw ModelError("no linearized membership for goal " + format_id(id));
    return *it;
}

FgpModel build_max_min(ModelKind kind, std::span<const LinearizedMembership> lins,
                       std::span<const FuzzyGoal> goals,
                       std::span<const LinearConstraint> constraints) {
    if (goals.empty()) throw ModelError("max-min model needs at least one goal");
    const std::size_t n = decision_dimension(lins, constraints);
    const std::size_t k = goals.size();
    const std::size_t width = n + 1 + k;

    FgpModel model;
    model.kind = kind;
    model.roles.numDecision = n;
    model.roles.lambda = n;
    for (std::size_t g = 0; g < k; ++g) model.roles.deviations.push_back(n + 1 + g);

    model.lp.sense = Sense::Max;
    model.lp.objective.coeffs.assign(width, 0.0);
    model.lp.objective.coeffs[n] = 1.0;

    for (std::size_t g = 0; g < k; ++g) {
        const auto& goal = goals[g];
        check_goal(goal);
        const auto& lin = find_lin(lins, goal.id);
        if (lin.affine.dimension() != n) throw ModelError("membership dimension mismatch");
        model.goalIds.push_back(goal.id);
        model.weights.push_back(goal.weight);
        model.memberships.push_back(lin.affine);

        // w lambda - mu~(x) <= const
        LinearConstraint achieve{"goal " + goal.label, std::vector<double>(width, 0.0),
                                 Relation::LE, lin.affine.constant};
        for (std::size_t j = 0; j < n; ++j) achieve.coeffs[j] = -lin.affine.coeffs[j];
        achieve.coeffs[n] = goal.weight;
        model.lp.constraints.push_back(std::move(achieve));
    }
    for (std::size_t g = 0; g < k; ++g) {
        LinearConstraint dev{"deviation " + goals[g].label, std::vector<double>(width, 0.0),
                             Relation::EQ, 1.0};
        dev.coeffs[n] = 1.0;
        dev.coeffs[n + 1 + g] = 1.0;
        model.lp.constraints.push_back(std::move(dev));
    }
    for (const auto& c : constraints) {
        if (c.coeffs.size() != n) throw ModelError("constraint '" + c.label + "' has wrong dimension");
        LinearConstraint padded = c;
        padded.coeffs.resize(width, 0.0);
        model.lp.constraints.push_back(std::move(padded));
    }
    return model;
}

}  // namespace

FgpModel build_weighted_sum(std::span<const LinearizedMembership> lins,
                            std::span<const double> weights,
                            std::span<const LinearConstraint> constraints) {
    if (lins.size() != weights.size()) throw ModelError("one weight per membership required");
    if (lins.empty()) throw ModelError("weighted-sum model needs at least one goal");
    if (std::any_of(weights.begin(), weights.end(), [](double w) { return !(w > 0.0); })) {
        throw ModelError("weights must be positive");
    }
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-6) {
        throw ModelError("weights sum to " + std::to_string(total) + ", expected 1");
    }
    const std::size_t n = decision_dimension(lins, constraints);

    FgpModel model;
    model.kind = ModelKind::WeightedSum;
    model.roles.numDecision = n;
    model.lp.sense = Sense::Max;
    model.lp.objective.coeffs.assign(n, 0.0);
    for (std::size_t g = 0; g < lins.size(); ++g) {
        const auto& lin = lins[g];
        if (lin.affine.dimension() != n) throw ModelError("membership dimension mismatch");
        for (std::size_t j = 0; j < n; ++j) model.lp.objective.coeffs[j] += weights[g] * lin.affine.coeffs[j];
        model.lp.objective.constant += weights[g] * lin.affine.constant;
        model.goalIds.push_back(lin.id);
        model.weights.push_back(weights[g]);
        model.memberships.push_back(lin.affine);
        model.lp.constraints.push_back(
            {"cap " + format_id(lin.id), lin.affine.coeffs, Relation::LE, 1.0 - lin.affine.constant});
    }
    for (const auto& c : constraints) {
        if (c.coeffs.size() != n) throw ModelError("constraint '" + c.label + "' has wrong dimension");
        model.lp.constraints.push_back(c);
    }
    return model;
}

FgpModel build_upper_fgp(std::span<const LinearizedMembership> upperLins,
                         std::span<const FuzzyGoal> upperGoals,
                         std::span<const LinearConstraint> constraints) {
    for (const auto& g : upperGoals) {
        if (g.id.level != 1) throw ModelError("goal " + g.label + " is not an upper-level goal");
    }
    return build_max_min(ModelKind::UpperLevel, upperLins, upperGoals, constraints);
}

FgpModel build_full_fgp(std::span<const LinearizedMembership> allLins,
                        std::span<const FuzzyGoal> allGoals,
                        std::span<const LinearConstraint> constraints,
                        std::span<const double> xF,
                        std::span<const std::size_t> upperVarIdx) {
    FgpModel model = build_max_min(ModelKind::FullHierarchy, allLins, allGoals, constraints);
    const std::size_t n = model.roles.numDecision;
    if (xF.size() != n) throw ModelError("upper-level solution has wrong dimension");
    const std::size_t width = model.lp.numVars();
    model.lp.fixedValues.assign(width, std::nullopt);
    for (std::size_t j : upperVarIdx) {
        if (j >= n) throw ModelError("upper variable index out of range");
        model.fixedVars[j] = xF[j];
        model.lp.fixedValues[j] = xF[j];
        LinearConstraint pin{"fix " + std::to_string(j), std::vector<double>(width, 0.0),
                             Relation::EQ, xF[j]};
        pin.coeffs[j] = 1.0;
        model.lp.constraints.push_back(std::move(pin));
    }
    return model;
}

std::optional<CandidateSolution> extract_solution(const FgpModel& model, const LpSolution& sol,
                                                  const DBLProblem& problem,
                                                  std::span<const FuzzyGoal> goals) {
    if (sol.status != LpStatus::Optimal) return std::nullopt;
    CandidateSolution out;
    out.kind = model.kind;
    const std::size_t n = model.roles.numDecision;
    out.x.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(n));
    out.objective = sol.objectiveValue;
    if (model.roles.lambda) out.lambda = sol.x[*model.roles.lambda];
    for (std::size_t d : model.roles.deviations) out.deviations.push_back(sol.x[d]);
    for (const auto& m : model.memberships) out.linearized.push_back(m(out.x));
    for (const auto& goal : goals) {
        const double f = evaluate(problem.objective(goal.id).f, out.x);
        out.goalIds.push_back(goal.id);
        out.objectiveValues.push_back(f);
        out.memberships.push_back(membership_value(goal, f));
    }
    return out;
}

}  // namespace dblfgp
