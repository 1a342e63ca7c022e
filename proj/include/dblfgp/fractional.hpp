#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dblfgp/model.hpp"

namespace dblfgp {

/// The Charnes-Cooper scale t collapsed to zero: the optimum is only
/// approached along a direction where the denominator grows without bound.
class DegeneracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The feasible region is empty or some coordinate is unbounded above.
class RegionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FractionalOptimum {
    std::vector<double> x;
    double value = 0.0;
    bool alternateOptima = false;
};

/// Optimizes f over {x >= 0 : constraints} through the substitution y = t x,
/// d.y + beta t = 1, which turns the ratio program into one LP.
FractionalOptimum optimize_fractional(const FractionalFunction& f,
                                      std::span<const LinearConstraint> constraints,
                                      Sense sense);

/// Maximizes each coordinate over the region; throws RegionError if the
/// region is empty or any coordinate is unbounded.
std::vector<double> coordinate_upper_bounds(std::size_t numVars,
                                            std::span<const LinearConstraint> constraints);

struct PayoffEntry {
    ObjectiveId id;
    std::string label;
    Sense sense = Sense::Min;
    double minValue = 0.0;
    double maxValue = 0.0;
    std::vector<double> argmin;
    std::vector<double> argmax;
    bool argminMultiple = false;
    bool argmaxMultiple = false;

    friend bool operator==(const PayoffEntry&, const PayoffEntry&) = default;
};

struct PayoffTable {
    std::vector<PayoffEntry> entries;

    [[nodiscard]] const PayoffEntry& entry(const ObjectiveId& id) const;

    friend bool operator==(const PayoffTable&, const PayoffTable&) = default;
};

/// Individual minimum and maximum of every objective, each taken alone.
PayoffTable payoff_table(const DBLProblem& problem);

}  // namespace dblfgp
