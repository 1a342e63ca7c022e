#include "dblfgp/fractional.hpp"

#include <string>

#include "dblfgp/simplex.hpp"

namespace dblfgp {

FractionalOptimum optimize_fractional(const FractionalFunction& f,
                                      std::span<const LinearConstraint> constraints,
                                      Sense sense) {
    const std::size_t n = f.dimension();
    if (f.denominator.dimension() != n) {
        throw StructuralError("numerator and denominator dimensions differ");
    }

    // Variables (y_0..y_{n-1}, t).
    LinearProgram lp;
    lp.sense = sense;
    lp.objective.coeffs = f.numerator.coeffs;
    lp.objective.coeffs.push_back(f.numerator.constant);
    for (const auto& c : constraints) {
        if (c.coeffs.size() != n) {
            throw StructuralError("constraint '" + c.label + "' has wrong dimension");
        }
        LinearConstraint scaled{c.label, c.coeffs, c.relation, 0.0};
        scaled.coeffs.push_back(-c.rhs);
        lp.constraints.push_back(std::move(scaled));
    }
    LinearConstraint normalize{"normalize", f.denominator.coeffs, Relation::EQ, 1.0};
    normalize.coeffs.push_back(f.denominator.constant);
    lp.constraints.push_back(std::move(normalize));

    const LpSolution sol = solve_lp(lp);
    if (sol.status == LpStatus::Infeasible) {
        throw RegionError("feasible region is empty or the denominator is never positive");
    }
    if (sol.status == LpStatus::Unbounded) {
        throw DegeneracyError("transformed program is unbounded");
    }
    const double t = sol.x[n];
    if (t <= kTol) {
        throw DegeneracyError("scale t = " + std::to_string(t) +
                              " at the optimum; the optimum is asymptotic");
    }
    FractionalOptimum out;
    out.x.resize(n);
    for (std::size_t j = 0; j < n; ++j) out.x[j] = sol.x[j] / t;
    out.value = evaluate(f, out.x);
    out.alternateOptima = sol.alternateOptima;
    return out;
}

std::vector<double> coordinate_upper_bounds(std::size_t numVars,
                                            std::span<const LinearConstraint> constraints) {
    std::vector<double> bounds(numVars, 0.0);
    LinearProgram lp;
    lp.sense = Sense::Max;
    lp.constraints.assign(constraints.begin(), constraints.end());
    for (std::size_t j = 0; j < numVars; ++j) {
        lp.objective.coeffs.assign(numVars, 0.0);
        lp.objective.coeffs[j] = 1.0;
        const LpSolution sol = solve_lp(lp);
        if (sol.status == LpStatus::Infeasible) throw RegionError("feasible region is empty");
        if (sol.status == LpStatus::Unbounded) {
            throw RegionError("variable " + std::to_string(j) + " is unbounded over the region");
        }
        bounds[j] = sol.objectiveValue;
    }
    return bounds;
}

const PayoffEntry& PayoffTable::entry(const ObjectiveId& id) const {
    for (const auto& e : entries) {
        if (e.id == id) return e;
    }
    throw StructuralError("payoff table has no entry for " + format_id(id));
}

PayoffTable payoff_table(const DBLProblem& problem) {
    check_structure(problem);
    coordinate_upper_bounds(problem.numVars(), problem.constraints);
    PayoffTable table;
    for (const auto& ref : problem.objectives()) {
        const auto& obj = *ref.objective;
        PayoffEntry e;
        e.id = ref.id;
        e.label = obj.label;
        e.sense = obj.sense;
        try {
            auto lo = optimize_fractional(obj.f, problem.constraints, Sense::Min);
            auto hi = optimize_fractional(obj.f, problem.constraints, Sense::Max);
            e.minValue = lo.value;
            e.maxValue = hi.value;
            e.argmin = std::move(lo.x);
            e.argmax = std::move(hi.x);
            e.argminMultiple = lo.alternateOptima;
            e.argmaxMultiple = hi.alternateOptima;
        } catch (const DegeneracyError& err) {
            throw DegeneracyError("objective '" + obj.label + "' (" + format_id(ref.id) +
                                  "): " + err.what());
        } catch (const RegionError& err) {
            throw RegionError("objective '" + obj.label + "' (" + format_id(ref.id) +
                              "): " + err.what());
        } catch (const EvaluationError& err) {
            throw EvaluationError("objective '" + obj.label + "' (" + format_id(ref.id) +
                                  "): " + err.what());
        }
        if (e.maxValue < e.minValue) e.maxValue = e.minValue;
        table.entries.push_back(std::move(e));
    }
    return table;
}

}  // namespace dblfgp
