#include "dblfgp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace dblfgp {

namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kReducedCostEps = 1e-9;
constexpr double kPhaseOneEps = 1e-8;

// Canonical-form tableau. Row `m` holds reduced costs, column `cols` the
// right-hand side.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0), basis_(rows, 0) {}

    double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
    double at(std::size_t r, std::size_t c) const { return data_[r * (cols_ + 1) + c]; }
    double& rhs(std::size_t r) { return at(r, cols_); }
    double rhs(std::size_t r) const { return at(r, cols_); }
    double& cost(std::size_t c) { return at(rows_, c); }
    double cost(std::size_t c) const { return at(rows_, c); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::vector<std::size_t>& basis() { return basis_; }
    const std::vector<std::size_t>& basis() const { return basis_; }

    void setCosts(std::span<const double> c) {
        for (std::size_t j = 0; j <= cols_; ++j) cost(j) = j < cols_ ? c[j] : 0.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            const double cb = c[basis_[i]];
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) cost(j) -= cb * at(i, j);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const double p = at(row, col);
        for (std::size_t j = 0; j <= cols_; ++j) at(row, j) /= p;
        at(row, col) = 1.0;
        for (std::size_t i = 0; i <= rows_; ++i) {
            if (i == row) continue;
            const double factor = at(i, col);
            if (factor == 0.0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) at(i, j) -= factor * at(row, j);
            at(i, col) = 0.0;
        }
        basis_[row] = col;
    }

    void dropRow(std::size_t row) {
        const std::size_t width = cols_ + 1;
        data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(row * width),
                    data_.begin() + static_cast<std::ptrdiff_t>((row + 1) * width));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
        --rows_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
    std::vector<std::size_t> basis_;
};

enum class PhaseResult { Optimal, Unbounded };

class Runner {
public:
    Runner(Tableau& t, const SolveOptions& options, std::size_t& pivots)
        : t_(t), options_(options), pivots_(pivots) {}

    // Minimizes the cost row currently loaded, entering only columns below
    // `enterLimit`.
    PhaseResult run(std::size_t enterLimit) {
        for (;;) {
            std::size_t entering = enterLimit;
            for (std::size_t j = 0; j < enterLimit; ++j) {
                if (t_.cost(j) < -kReducedCostEps) {
                    entering = j;
                    break;
                }
            }
            if (entering == enterLimit) return PhaseResult::Optimal;

            std::size_t leaving = t_.rows();
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < t_.rows(); ++i) {
                const double a = t_.at(i, entering);
                if (a <= kPivotEps) continue;
                const double ratio = t_.rhs(i) / a;
                if (leaving == t_.rows()) {
                    best = ratio;
                    leaving = i;
                    continue;
                }
                const double slack = 1e-12 * (1.0 + std::abs(best));
                if (ratio < best - slack ||
                    (ratio <= best + slack && t_.basis()[i] < t_.basis()[leaving])) {
                    best = std::min(best, ratio);
                    leaving = i;
                }
            }
            if (leaving == t_.rows()) return PhaseResult::Unbounded;

            if (++pivots_ > options_.pivotCap) {
                throw SolverError("simplex exceeded pivot cap of " +
                                  std::to_string(options_.pivotCap));
            }
            t_.pivot(leaving, entering);
            if (t_.rhs(leaving) < 0.0 && t_.rhs(leaving) > -kPivotEps) t_.rhs(leaving) = 0.0;
            if (options_.onBasis) {
                std::vector<std::size_t> sorted = t_.basis();
                std::sort(sorted.begin(), sorted.end());
                options_.onBasis(sorted);
            }
        }
    }

private:
    Tableau& t_;
    const SolveOptions& options_;
    std::size_t& pivots_;
};

struct Row {
    std::vector<double> coeffs;
    Relation relation;
    double rhs;
};

}  // namespace

const char* to_string(LpStatus status) {
    switch (status) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

LpSolution solve_lp(const LinearProgram& lp, const SolveOptions& options) {
    const std::size_t n = lp.numVars();
    if (!lp.lowerBounds.empty() && lp.lowerBounds.size() != n) {
        throw StructuralError("lower bound vector has length " +
                              std::to_string(lp.lowerBounds.size()) + ", expected " +
                              std::to_string(n));
    }
    if (!lp.fixedValues.empty() && lp.fixedValues.size() != n) {
        throw StructuralError("fixed value vector has length " +
                              std::to_string(lp.fixedValues.size()) + ", expected " +
                              std::to_string(n));
    }
    for (const auto& c : lp.constraints) {
        if (c.coeffs.size() != n) {
            throw StructuralError("constraint '" + c.label + "' has " +
                                  std::to_string(c.coeffs.size()) + " coefficients, expected " +
                                  std::to_string(n));
        }
    }

    auto lower = [&](std::size_t j) { return lp.lowerBounds.empty() ? 0.0 : lp.lowerBounds[j]; };
    auto fixed = [&](std::size_t j) -> std::optional<double> {
        return lp.fixedValues.empty() ? std::nullopt : lp.fixedValues[j];
    };

    // Columns for the free variables, shifted so each has lower bound 0.
    std::vector<std::size_t> freeVars;
    std::vector<double> base(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        if (auto v = fixed(j)) {
            if (*v < lower(j) - kTol) {
                throw StructuralError("fixed value of variable " + std::to_string(j) +
                                      " is below its lower bound");
            }
            base[j] = *v;
        } else {
            base[j] = lower(j);
            freeVars.push_back(j);
        }
    }
    const std::size_t nf = freeVars.size();

    std::vector<Row> rows;
    rows.reserve(lp.constraints.size());
    for (const auto& c : lp.constraints) {
        Row r{std::vector<double>(nf), c.relation, c.rhs};
        for (std::size_t j = 0; j < n; ++j) r.rhs -= c.coeffs[j] * base[j];
        for (std::size_t k = 0; k < nf; ++k) r.coeffs[k] = c.coeffs[freeVars[k]];
        if (r.rhs < 0.0) {
            for (double& a : r.coeffs) a = -a;
            r.rhs = -r.rhs;
            if (r.relation == Relation::LE) r.relation = Relation::GE;
            else if (r.relation == Relation::GE) r.relation = Relation::LE;
        }
        rows.push_back(std::move(r));
    }

    const std::size_t m = rows.size();
    std::size_t numSlack = 0;
    std::size_t numArtificial = 0;
    for (const auto& r : rows) {
        if (r.relation != Relation::EQ) ++numSlack;
        if (r.relation != Relation::LE) ++numArtificial;
    }
    const std::size_t firstArtificial = nf + numSlack;
    const std::size_t cols = firstArtificial + numArtificial;

    Tableau t(m, cols);
    {
        std::size_t slack = nf;
        std::size_t art = firstArtificial;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < nf; ++k) t.at(i, k) = rows[i].coeffs[k];
            t.rhs(i) = rows[i].rhs;
            switch (rows[i].relation) {
                case Relation::LE:
                    t.at(i, slack) = 1.0;
                    t.basis()[i] = slack++;
                    break;
                case Relation::GE:
                    t.at(i, slack++) = -1.0;
                    t.at(i, art) = 1.0;
                    t.basis()[i] = art++;
                    break;
                case Relation::EQ:
                    t.at(i, art) = 1.0;
                    t.basis()[i] = art++;
                    break;
            }
        }
    }

    LpSolution out;
    std::size_t pivots = 0;
    Runner runner(t, options, pivots);

    if (numArtificial > 0) {
        std::vector<double> phaseOne(cols, 0.0);
        std::fill(phaseOne.begin() + static_cast<std::ptrdiff_t>(firstArtificial), phaseOne.end(),
                  1.0);
        t.setCosts(phaseOne);
        runner.run(cols);
        if (-t.rhs(t.rows()) > kPhaseOneEps * (1.0 + static_cast<double>(m))) {
            out.status = LpStatus::Infeasible;
            out.pivotCount = pivots;
            return out;
        }
        // Drive zero-level artificials out of the basis; rows where that is
        // impossible are linearly dependent and dropped.
        for (std::size_t i = 0; i < t.rows();) {
            if (t.basis()[i] < firstArtificial) {
                ++i;
                continue;
            }
            std::size_t col = firstArtificial;
            for (std::size_t j = 0; j < firstArtificial; ++j) {
                if (std::abs(t.at(i, j)) > 1e-9) {
                    col = j;
                    break;
                }
            }
            if (col == firstArtificial) {
                t.dropRow(i);
                continue;
            }
            ++pivots;
            t.pivot(i, col);
            ++i;
        }
    }

    std::vector<double> phaseTwo(cols, 0.0);
    const double sign = lp.sense == Sense::Max ? -1.0 : 1.0;
    for (std::size_t k = 0; k < nf; ++k) phaseTwo[k] = sign * lp.objective.coeffs[freeVars[k]];
    t.setCosts(phaseTwo);
    const PhaseResult result = runner.run(firstArtificial);
    out.pivotCount = pivots;
    if (result == PhaseResult::Unbounded) {
        out.status = LpStatus::Unbounded;
        return out;
    }

    std::vector<double> values(cols, 0.0);
    for (std::size_t i = 0; i < t.rows(); ++i) values[t.basis()[i]] = std::max(0.0, t.rhs(i));
    out.x = base;
    for (std::size_t k = 0; k < nf; ++k) out.x[freeVars[k]] += values[k];

    std::vector<bool> basic(cols, false);
    for (std::size_t b : t.basis()) basic[b] = true;
    for (std::size_t j = 0; j < firstArtificial; ++j) {
        if (!basic[j] && std::abs(t.cost(j)) <= kReducedCostEps) {
            out.alternateOptima = true;
            break;
        }
    }

    for (const auto& c : lp.constraints) {
        if (c.violation(out.x) > 1e-7) {
            throw SolverError("simplex returned a point violating constraint '" + c.label + "'");
        }
    }
    out.status = LpStatus::Optimal;
    out.objectiveValue = lp.objective(out.x);
    return out;
}

}  // namespace dblfgp
