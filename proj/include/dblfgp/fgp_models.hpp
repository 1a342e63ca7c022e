#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dblfgp/linearize.hpp"
#include "dblfgp/membership.hpp"
#include "dblfgp/simplex.hpp"

namespace dblfgp {

class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ModelKind { UpperLevel, FullHierarchy, WeightedSum };

const char* to_string(ModelKind kind);

/// Column layout of the assembled LP: decision variables first, then lambda
/// and one negative deviation per goal (max-min kinds only).
struct VariableRoles {
    std::size_t numDecision = 0;
    std::optional<std::size_t> lambda;
    std::vector<std::size_t> deviations;
};

struct FgpModel {
    ModelKind kind = ModelKind::UpperLevel;
    LinearProgram lp;
    VariableRoles roles;
    std::vector<ObjectiveId> goalIds;
    std::vector<double> weights;
    std::vector<AffineForm> memberships;
    std::map<std::size_t, double> fixedVars;
};

/// max sum w_k mu_k(x) s.t. mu_k(x) <= 1 and x in S. Weights must sum to 1.
FgpModel build_weighted_sum(std::span<const LinearizedMembership> lins,
                            std::span<const double> weights,
                            std::span<const LinearConstraint> constraints);

/// max lambda s.t. w_k lambda <= mu_k(x), lambda + d_k = 1, x in S, over the
/// leader's goals.
FgpModel build_upper_fgp(std::span<const LinearizedMembership> upperLins,
                         std::span<const FuzzyGoal> upperGoals,
                         std::span<const LinearConstraint> constraints);

/// The same max-min model over every goal with the leader's variables pinned
/// to their values in `xF`.
FgpModel build_full_fgp(std::span<const LinearizedMembership> allLins,
                        std::span<const FuzzyGoal> allGoals,
                        std::span<const LinearConstraint> constraints,
                        std::span<const double> xF,
                        std::span<const std::size_t> upperVarIdx);

struct CandidateSolution {
    ModelKind kind = ModelKind::UpperLevel;
    std::vector<double> x;
    double lambda = 0.0;
    double objective = 0.0;
    std::vector<ObjectiveId> goalIds;
    std::vector<double> deviations;
    std::vector<double> linearized;
    std::vector<double> memberships;
    std::vector<double> objectiveValues;
};

/// Decodes an optimal LP solution into decision values, lambda, deviations,
/// and clamped memberships / objective values of `goals` at x. Returns
/// nothing unless the solve was optimal.
std::optional<CandidateSolution> extract_solution(const FgpModel& model, const LpSolution& sol,
                                                  const DBLProblem& problem,
                                                  std::span<const FuzzyGoal> goals);

}  // namespace dblfgp
