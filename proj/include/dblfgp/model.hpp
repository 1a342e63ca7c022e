#pragma once

// Problem model for decentralized bi-level multiobjective linear-fractional
// programs: one leader at level 1, one or more followers at level 2, each
// owning a disjoint block of variables and a list of ratio objectives over a
// shared polytope {x >= 0 : A x (<=,=,>=) b}.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dblfgp {

/// Absolute tolerance used for positivity and degeneracy checks.
inline constexpr double kTol = 1e-9;

class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a ratio is evaluated at a point where its denominator is not
/// certified positive.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// c . x + constant
struct AffineForm {
    std::vector<double> coeffs;
    double constant = 0.0;

    [[nodiscard]] std::size_t dimension() const { return coeffs.size(); }
    [[nodiscard]] double operator()(std::span<const double> x) const;
    [[nodiscard]] bool finite() const;

    friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// numerator(x) / denominator(x)
struct FractionalFunction {
    AffineForm numerator;
    AffineForm denominator;

    [[nodiscard]] std::size_t dimension() const { return numerator.dimension(); }

    friend bool operator==(const FractionalFunction&, const FractionalFunction&) = default;
};

enum class Relation { LE, EQ, GE };
enum class Sense { Min, Max };

struct LinearConstraint {
    std::string label;
    std::vector<double> coeffs;
    Relation relation = Relation::LE;
    double rhs = 0.0;

    /// Signed violation, <= 0 when satisfied.
    [[nodiscard]] double violation(std::span<const double> x) const;

    friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

struct Objective {
    std::string label;
    Sense sense = Sense::Min;
    FractionalFunction f;

    friend bool operator==(const Objective&, const Objective&) = default;
};

/// Identifies objective `index` (1-based) of decision maker `dm`. The leader
/// is dm 1; followers are numbered 2, 3, ... so that ids read like f11, f21.
struct ObjectiveId {
    int level = 1;
    int dm = 1;
    int index = 1;

    friend auto operator<=>(const ObjectiveId&, const ObjectiveId&) = default;
};

struct DecisionLevel {
    int level = 1;  // 1 = leader
    int dmIndex = 1;
    std::vector<std::size_t> controlledVars;
    std::vector<Objective> objectives;

    friend bool operator==(const DecisionLevel&, const DecisionLevel&) = default;
};

struct DBLProblem {
    std::string name;
    std::vector<std::string> varNames;
    std::vector<LinearConstraint> constraints;
    std::vector<DecisionLevel> levels;

    [[nodiscard]] std::size_t numVars() const { return varNames.size(); }
    [[nodiscard]] const DecisionLevel& leader() const;

    /// Objectives in level order: leader first, then followers by dmIndex.
    struct ObjectiveRef {
        ObjectiveId id;
        const Objective* objective;
    };
    [[nodiscard]] std::vector<ObjectiveRef> objectives() const;
    [[nodiscard]] const Objective& objective(const ObjectiveId& id) const;
    [[nodiscard]] std::vector<std::size_t> upperVariables() const;

    [[nodiscard]] bool feasible(std::span<const double> x, double tol = 1e-7) const;

    friend bool operator==(const DBLProblem&, const DBLProblem&) = default;
};

/// Returns numerator(x)/denominator(x); throws EvaluationError if the
/// denominator is at or below kTol.
double evaluate(const FractionalFunction& f, std::span<const double> x);

struct DenominatorCheck {
    ObjectiveId id;
    std::string label;
    double minimum = 0.0;
    bool ok = false;
};

struct ValidationReport {
    bool partitionOk = false;
    std::string partitionMessage;
    bool feasible = false;
    std::vector<DenominatorCheck> denominators;
    std::vector<std::string> warnings;

    [[nodiscard]] bool valid() const;
};

/// Throws StructuralError on dimension mismatches; everything else is
/// reported.
void check_structure(const DBLProblem& problem);
ValidationReport validate(const DBLProblem& problem);

std::string format_id(const ObjectiveId& id);

}  // namespace dblfgp
