#pragma once

// Interactive leader/follower loop: compute a candidate from the current
// fuzzy goals, let the leader accept it or revise tolerances and weights,
// and repeat.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dblfgp/fgp_models.hpp"
#include "dblfgp/fractional.hpp"
#include "dblfgp/linearize.hpp"
#include "dblfgp/membership.hpp"
#include "dblfgp/model.hpp"

namespace dblfgp {

/// Operation not permitted in the session's current status.
class InvalidTransition : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Revision rejected; the session is left unchanged.
class InvalidRevision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationFailed : public std::runtime_error {
public:
    ValidationFailed(const std::string& what, ValidationReport report)
        : std::runtime_error(what), report_(std::move(report)) {}
    [[nodiscard]] const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

enum class SessionStatus { AwaitingSolve, AwaitingVerdict, Accepted };
enum class VerdictKind { Pending, Accepted, Revised };

const char* to_string(SessionStatus status);
const char* to_string(VerdictKind kind);

struct Verdict {
    VerdictKind kind = VerdictKind::Pending;
    /// Revised only. Ideals cannot be changed here.
    std::vector<GoalOverride> changes;

    static Verdict accept() { return {VerdictKind::Accepted, {}}; }
    static Verdict revise(std::vector<GoalOverride> changes) {
        return {VerdictKind::Revised, std::move(changes)};
    }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// A static row from elsewhere (e.g. another method's result) shown
/// next to the computed candidates in reports.
struct ComparisonRow {
    std::string label;
    std::vector<double> x;
    std::vector<double> memberships;

    friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

struct Iteration {
    int index = 0;
    std::vector<FuzzyGoal> goalsSnapshot;
    std::vector<LinearizedMembership> linearizations;
    bool failed = false;
    std::string failure;
    std::vector<double> xF;
    std::vector<double> xS;
    double lambdaUpper = 0.0;
    double lambdaFull = 0.0;
    std::vector<double> memberships;
    std::vector<double> objectiveValues;
    Verdict verdict;

    friend bool operator==(const Iteration&, const Iteration&) = default;
};

struct SessionState {
    DBLProblem problem;
    PayoffTable payoff;
    std::vector<FuzzyGoal> goals;
    std::vector<Iteration> history;
    SessionStatus status = SessionStatus::AwaitingSolve;
    std::vector<std::string> warnings;
    std::vector<ComparisonRow> comparisons;

    friend bool operator==(const SessionState&, const SessionState&) = default;
};

/// Validates the problem, builds the payoff table and default goals, then
/// applies the initial overrides (ideal, tolerance and weight are all
/// editable at this point).
SessionState start_session(DBLProblem problem, const std::vector<GoalOverride>& overrides = {},
                           std::vector<ComparisonRow> comparisons = {});

/// Linearizes every membership, solves the leader's model, then the full
/// model with the leader's variables pinned. Stage failures are recorded in
/// the iteration and leave the session awaiting a revision.
const Iteration& compute_candidate(SessionState& state);

/// Accept freezes the pending candidate. Revise edits tolerance limits and
/// weights and returns the session to AwaitingSolve. A revision is also
/// accepted after a failed candidate. Strong exception guarantee.
void submit_verdict(SessionState& state, const Verdict& verdict);

struct ReportRow {
    int iteration = 0;
    bool failed = false;
    std::string failure;
    std::string verdict;
    std::vector<double> xF;
    std::vector<double> x;
    std::vector<double> objectiveValues;
    std::vector<double> memberships;
    double lambdaUpper = 0.0;
    double lambdaFull = 0.0;
};

struct SolutionReport {
    std::string problemName;
    std::string status;
    std::vector<std::string> varNames;
    std::vector<std::string> goalLabels;
    std::vector<ReportRow> rows;
    std::vector<ComparisonRow> comparisons;
};

/// Throws InvalidTransition with "no iterations" for an empty history.
SolutionReport report(const SessionState& state);

}  // namespace dblfgp
