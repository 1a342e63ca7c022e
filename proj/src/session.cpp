#include "dblfgp/session.hpp"

#include <algorithm>
#include <sstream>

namespace dblfgp {

const char* to_string(SessionStatus status) {
    switch (status) {
        case SessionStatus::AwaitingSolve: return "awaiting-solve";
        case SessionStatus::AwaitingVerdict: return "awaiting-verdict";
        case SessionStatus::Accepted: return "accepted";
    }
    return "unknown";
}

const char* to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Pending: return "pending";
        case VerdictKind::Accepted: return "accepted";
        case VerdictKind::Revised: return "revised";
    }
    return "unknown";
}

namespace {

FuzzyGoal& goal_by_label(std::vector<FuzzyGoal>& goals, const std::string& label) {
    auto it = std::find_if(goals.begin(), goals.end(), [&](const FuzzyGoal& g) {
        return g.label == label || format_id(g.id) == label;
    });
    if (it == goals.end()) throw InvalidRevision("unknown goal '" + label + "'");
    return *it;
}

std::string describe(const ValidationReport& report) {
    std::ostringstream os;
    os << "problem failed validation:";
    if (!report.partitionOk) os << " " << report.partitionMessage << ";";
    if (!report.feasible) os << " feasible region is empty;";
    for (const auto& d : report.denominators) {
        if (!d.ok) os << " denominator of " << d.label << " reaches " << d.minimum << ";";
    }
    return os.str();
}

}  // namespace

SessionState start_session(DBLProblem problem, const std::vector<GoalOverride>& overrides,
                           std::vector<ComparisonRow> comparisons) {
    ValidationReport validation = validate(problem);
    if (!validation.valid()) throw ValidationFailed(describe(validation), std::move(validation));

    SessionState state;
    state.payoff = payoff_table(problem);
    state.goals = default_goals(state.payoff);
    for (const auto& edit : overrides) {
        FuzzyGoal& g = goal_by_label(state.goals, edit.label);
        g = apply_override(g, edit);
    }
    state.warnings = goal_warnings(state.goals, state.payoff);
    state.problem = std::move(problem);
    state.comparisons = std::move(comparisons);
    state.status = SessionStatus::AwaitingSolve;
    return state;
}

const Iteration& compute_candidate(SessionState& state) {
    if (state.status != SessionStatus::AwaitingSolve) {
        throw InvalidTransition(std::string("cannot solve while session is ") +
                                to_string(state.status));
    }
    Iteration it;
    it.index = static_cast<int>(state.history.size()) + 1;
    it.goalsSnapshot = state.goals;

    const auto& problem = state.problem;
    try {
        it.linearizations = linearize_goals(problem, state.goals, &state.payoff);

        std::vector<FuzzyGoal> upperGoals;
        std::copy_if(state.goals.begin(), state.goals.end(), std::back_inserter(upperGoals),
                     [](const FuzzyGoal& g) { return g.id.level == 1; });

        const FgpModel upper = build_upper_fgp(it.linearizations, upperGoals, problem.constraints);
        const LpSolution upperSol = solve_lp(upper.lp);
        auto upperCandidate = extract_solution(upper, upperSol, problem, upperGoals);
        if (!upperCandidate) {
            throw ModelError(std::string("upper-level model is ") + to_string(upperSol.status));
        }
        it.xF = upperCandidate->x;
        it.lambdaUpper = upperCandidate->lambda;

        const auto upperVars = problem.upperVariables();
        const FgpModel full = build_full_fgp(it.linearizations, state.goals, problem.constraints,
                                             it.xF, upperVars);
        const LpSolution fullSol = solve_lp(full.lp);
        auto fullCandidate = extract_solution(full, fullSol, problem, state.goals);
        if (!fullCandidate) {
            throw ModelError(std::string("full-hierarchy model with fixed leader variables is ") +
                             to_string(fullSol.status));
        }
        it.xS = fullCandidate->x;
        it.lambdaFull = fullCandidate->lambda;
        it.memberships = fullCandidate->memberships;
        it.objectiveValues = fullCandidate->objectiveValues;
        state.status = SessionStatus::AwaitingVerdict;
    } catch (const std::exception& err) {
        it.failed = true;
        it.failure = err.what();
        state.status = SessionStatus::AwaitingSolve;
    }
    state.history.push_back(std::move(it));
    return state.history.back();
}

void submit_verdict(SessionState& state, const Verdict& verdict) {
    if (state.status == SessionStatus::Accepted) {
        throw InvalidTransition("session already accepted a solution");
    }
    if (verdict.kind == VerdictKind::Pending) throw InvalidTransition("verdict must be accept or revise");

    const bool afterFailure = state.status == SessionStatus::AwaitingSolve && !state.history.empty() &&
                              state.history.back().failed &&
                              state.history.back().verdict.kind == VerdictKind::Pending;
    if (state.status != SessionStatus::AwaitingVerdict && !afterFailure) {
        throw InvalidTransition(std::string("no candidate awaiting a verdict (session is ") +
                                to_string(state.status) + ")");
    }
    if (verdict.kind == VerdictKind::Accepted) {
        if (afterFailure) throw InvalidTransition("cannot accept a failed candidate");
        state.history.back().verdict = verdict;
        state.status = SessionStatus::Accepted;
        return;
    }

    std::vector<FuzzyGoal> goals = state.goals;
    for (const auto& edit : verdict.changes) {
        if (edit.ideal) throw InvalidRevision("ideal values cannot be revised; start a new session");
        FuzzyGoal& g = goal_by_label(goals, edit.label);
        try {
            g = apply_override(g, edit);
        } catch (const DegenerateGoalError& err) {
            throw InvalidRevision(err.what());
        }
    }
    state.goals = std::move(goals);
    state.history.back().verdict = verdict;
    state.status = SessionStatus::AwaitingSolve;
}

SolutionReport report(const SessionState& state) {
    if (state.history.empty()) throw InvalidTransition("no iterations");
    SolutionReport out;
    out.problemName = state.problem.name;
    out.status = to_string(state.status);
    out.varNames = state.problem.varNames;
    for (const auto& g : state.goals) out.goalLabels.push_back(g.label);
    for (const auto& it : state.history) {
        ReportRow row;
        row.iteration = it.index;
        row.failed = it.failed;
        row.failure = it.failure;
        row.verdict = to_string(it.verdict.kind);
        row.xF = it.xF;
        row.x = it.xS;
        row.objectiveValues = it.objectiveValues;
        row.memberships = it.memberships;
        row.lambdaUpper = it.lambdaUpper;
        row.lambdaFull = it.lambdaFull;
        out.rows.push_back(std::move(row));
    }
    out.comparisons = state.comparisons;
    return out;
}

}  // namespace dblfgp
