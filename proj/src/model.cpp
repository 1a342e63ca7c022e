#include "dblfgp/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dblfgp/simplex.hpp"

namespace dblfgp {

double AffineForm::operator()(std::span<const double> x) const {
    if (x.size() != coeffs.size()) {
        throw StructuralError("point has " + std::to_string(x.size()) +
                              " components, expected " + std::to_string(coeffs.size()));
    }
    double v = constant;
    for (std::size_t j = 0; j < coeffs.size(); ++j) v += coeffs[j] * x[j];
    return v;
}

bool AffineForm::finite() const {
    return std::isfinite(constant) &&
           std::all_of(coeffs.begin(), coeffs.end(), [](double c) { return std::isfinite(c); });
}

double LinearConstraint::violation(std::span<const double> x) const {
    double lhs = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) lhs += coeffs[j] * x[j];
    switch (relation) {
        case Relation::LE: return lhs - rhs;
        case Relation::GE: return rhs - lhs;
        case Relation::EQ: return std::abs(lhs - rhs);
    }
    return 0.0;
}

std::string format_id(const ObjectiveId& id) {
    return "f" + std::to_string(id.dm) + std::to_string(id.index);
}

const DecisionLevel& DBLProblem::leader() const {
    for (const auto& l : levels) {
        if (l.level == 1) return l;
    }
    throw StructuralError("problem has no level-1 decision maker");
}

std::vector<DBLProblem::ObjectiveRef> DBLProblem::objectives() const {
    std::vector<const DecisionLevel*> ordered;
    for (const auto& l : levels) ordered.push_back(&l);
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
        return std::pair(a->level, a->dmIndex) < std::pair(b->level, b->dmIndex);
    });
    std::vector<ObjectiveRef> out;
    int dm = 0;
    for (const auto* l : ordered) {
        ++dm;
        for (std::size_t j = 0; j < l->objectives.size(); ++j) {
            out.push_back({ObjectiveId{l->level, dm, static_cast<int>(j + 1)}, &l->objectives[j]});
        }
    }
    return out;
}

const Objective& DBLProblem::objective(const ObjectiveId& id) const {
    for (const auto& ref : objectives()) {
        if (ref.id == id) return *ref.objective;
    }
    throw StructuralError("no objective " + format_id(id));
}

std::vector<std::size_t> DBLProblem::upperVariables() const {
    std::vector<std::size_t> vars = leader().controlledVars;
    std::sort(vars.begin(), vars.end());
    return vars;
}

bool DBLProblem::feasible(std::span<const double> x, double tol) const {
    if (x.size() != numVars()) return false;
    if (std::any_of(x.begin(), x.end(), [&](double v) { return v < -tol; })) return false;
    return std::all_of(constraints.begin(), constraints.end(),
                       [&](const LinearConstraint& c) { return c.violation(x) <= tol; });
}

double evaluate(const FractionalFunction& f, std::span<const double> x) {
    const double d = f.denominator(x);
    if (d <= kTol) {
        throw EvaluationError("denominator " + std::to_string(d) +
                              " is not positive at the evaluation point");
    }
    return f.numerator(x) / d;
}

bool ValidationReport::valid() const {
    return partitionOk && feasible &&
           std::all_of(denominators.begin(), denominators.end(),
                       [](const DenominatorCheck& c) { return c.ok; });
}

void check_structure(const DBLProblem& problem) {
    const std::size_t n = problem.numVars();
    if (n == 0) throw StructuralError("problem declares no variables");
    for (const auto& c : problem.constraints) {
        if (c.coeffs.size() != n) {
            throw StructuralError("constraint '" + c.label + "' has " +
                                  std::to_string(c.coeffs.size()) + " coefficients, expected " +
                                  std::to_string(n));
        }
        if (!std::isfinite(c.rhs) ||
            !std::all_of(c.coeffs.begin(), c.coeffs.end(), [](double v) { return std::isfinite(v); })) {
            throw StructuralError("constraint '" + c.label + "' has a non-finite entry");
        }
    }
    for (const auto& ref : problem.objectives()) {
        const auto& f = ref.objective->f;
        for (const auto* part : {&f.numerator, &f.denominator}) {
            if (part->dimension() != n) {
                throw StructuralError("objective '" + ref.objective->label + "' (" +
                                      format_id(ref.id) + ") has " +
                                      std::to_string(part->dimension()) +
                                      " coefficients, expected " + std::to_string(n));
            }
            if (!part->finite()) {
                throw StructuralError("objective '" + ref.objective->label +
                                      "' has a non-finite coefficient");
            }
        }
    }
}

namespace {

std::string partition_problems(const DBLProblem& problem) {
    const std::size_t n = problem.numVars();
    int leaders = 0;
    int followers = 0;
    std::vector<int> owner(n, 0);
    for (const auto& l : problem.levels) {
        if (l.level == 1) ++leaders;
        else if (l.level == 2) ++followers;
        else return "level " + std::to_string(l.level) + " is not 1 or 2";
        if (l.objectives.empty()) return "level requires at least one objective";
        for (std::size_t v : l.controlledVars) {
            if (v >= n) return "controlled variable index " + std::to_string(v) + " out of range";
            if (owner[v]++ > 0) {
                return "variable '" + problem.varNames[v] +
                       "' is controlled by more than one decision maker";
            }
        }
    }
    if (leaders != 1) return "expected exactly one level-1 decision maker, found " + std::to_string(leaders);
    if (followers < 1) return "expected at least one level-2 decision maker";
    for (std::size_t v = 0; v < n; ++v) {
        if (owner[v] == 0) return "variable '" + problem.varNames[v] + "' has no controlling decision maker";
    }
    return {};
}

}  // namespace

ValidationReport validate(const DBLProblem& problem) {
    check_structure(problem);
    ValidationReport report;
    report.partitionMessage = partition_problems(problem);
    report.partitionOk = report.partitionMessage.empty();
    if (report.partitionOk) report.partitionMessage = "ok";

    const std::size_t n = problem.numVars();
    LinearProgram phaseOne;
    phaseOne.objective.coeffs.assign(n, 0.0);
    phaseOne.constraints = problem.constraints;
    report.feasible = solve_lp(phaseOne).status == LpStatus::Optimal;

    if (!report.feasible) return report;
    for (const auto& ref : problem.objectives()) {
        LinearProgram lp;
        lp.objective = ref.objective->f.denominator;
        lp.constraints = problem.constraints;
        const LpSolution sol = solve_lp(lp);
        DenominatorCheck check{ref.id, ref.objective->label, 0.0, false};
        if (sol.status == LpStatus::Optimal) {
            check.minimum = sol.objectiveValue;
            check.ok = sol.objectiveValue > kTol;
        } else {
            check.minimum = -std::numeric_limits<double>::infinity();
        }
        report.denominators.push_back(check);
    }
    return report;
}

}  // namespace dblfgp
