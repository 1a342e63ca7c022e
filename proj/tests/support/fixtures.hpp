#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "dblfgp/problem_io.hpp"
#include "dblfgp/session.hpp"

namespace fixture {

inline dblfgp::ProblemDocument example1() {
    return dblfgp::parse_problem(*dblfgp::bundled_problem("example1"));
}

inline dblfgp::SessionState example1_session() {
    auto doc = example1();
    return dblfgp::start_session(std::move(doc.problem), doc.goals, std::move(doc.comparisons));
}

// Reference values for example1, objective order f11 f12 f21 f22 f31 f32.
inline constexpr std::array<double, 6> kTableMax{0.67, 1.25, 1.353, 1.0, -0.026, 1.125};
inline constexpr std::array<double, 6> kTableMin{-0.733, 0.0, -0.50, -1.18, -0.75, 0.27};
inline constexpr std::array<double, 6> kIdeal{-0.7, 0.0, -0.5, -1.0, -0.75, 0.25};
inline constexpr std::array<double, 6> kTolerance{0.6, 1.2, 1.3, 1.0, -0.05, 1.125};
inline constexpr std::array<double, 6> kWeight{0.769, 0.83, 0.56, 0.5, 1.43, 1.143};

inline const std::array<std::array<double, 3>, 6> kMaximizers{{
    {0.5, 1.5, 0.0}, {2.0, 0.0, 0.0}, {0.0, 1.0, 0.0},
    {2.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 1.0, 0.0},
}};

// Linearized memberships: constant, then coefficients of x0, x1, x2.
inline const std::array<std::array<double, 4>, 6> kLinearized{{
    {0.773, -0.049, 0.185, -0.178},
    {0.630, 0.185, -0.093, -0.278},
    {0.792, -0.486, 0.208, -0.347},
    {0.992, 0.050, -0.017, -0.099},
    {0.821, -0.625, 0.179, -3.036},
    {0.737, -0.207, 0.116, -0.066},
}};

inline constexpr std::array<double, 3> kXF{1.25, 0.31, 0.0};
inline constexpr std::array<double, 3> kXS{1.25, 0.75, 0.0};
inline constexpr std::array<double, 6> kObjectivesAtXS{-0.48, 0.33, -0.45, -1.02, -0.35, 0.61};
inline constexpr std::array<double, 6> kMembershipsAtXS{0.83, 0.72, 0.47, 1.0, 0.43, 0.52};
inline constexpr std::array<double, 6> kComparisonMemberships{0.46, 0.76, 0.31, 1.0, 0.54, 0.52};

/// Random bounded, feasible-by-construction bi-level instance with positive
/// denominators on x >= 0.
inline dblfgp::DBLProblem random_problem(std::mt19937_64& rng) {
    using namespace dblfgp;
    std::uniform_int_distribution<int> nvars(2, 4);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    std::uniform_real_distribution<double> pos(0.0, 2.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t n = static_cast<std::size_t>(nvars(rng));

    DBLProblem p;
    p.name = "random";
    for (std::size_t j = 0; j < n; ++j) p.varNames.push_back("x" + std::to_string(j));

    std::vector<double> interior(n);
    for (double& v : interior) v = 0.2 + unit(rng);
    double sum = 0.0;
    for (double v : interior) sum += v;
    p.constraints.push_back({"cap", std::vector<double>(n, 1.0), Relation::LE, sum + 1.0 + 3.0 * unit(rng)});
    const int extra = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int k = 0; k < extra; ++k) {
        LinearConstraint c{"c" + std::to_string(k), std::vector<double>(n), Relation::LE, 0.0};
        double lhs = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            c.coeffs[j] = std::round(coef(rng) * 4.0) / 4.0;
            lhs += c.coeffs[j] * interior[j];
        }
        c.rhs = lhs + 0.5 + unit(rng);
        p.constraints.push_back(std::move(c));
    }
    if (unit(rng) < 0.5) {
        p.constraints.push_back({"floor", std::vector<double>(n, 1.0), Relation::GE, 0.5 * sum});
    }

    // Leader owns variable 0; followers split the rest.
    const std::size_t followers = n >= 3 && unit(rng) < 0.5 ? 2 : 1;
    DecisionLevel leader{1, 1, {0}, {}};
    std::vector<DecisionLevel> lower;
    for (std::size_t f = 0; f < followers; ++f) lower.push_back({2, static_cast<int>(f + 1), {}, {}});
    for (std::size_t j = 1; j < n; ++j) lower[(j - 1) % followers].controlledVars.push_back(j);

    auto objective = [&](const std::string& label) {
        Objective o;
        o.label = label;
        o.sense = unit(rng) < 0.8 ? Sense::Min : Sense::Max;
        o.f.numerator.coeffs.resize(n);
        o.f.denominator.coeffs.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            o.f.numerator.coeffs[j] = std::round(coef(rng) * 4.0) / 4.0;
            o.f.denominator.coeffs[j] = std::round(pos(rng) * 4.0) / 4.0;
        }
        o.f.numerator.constant = std::round(coef(rng) * 4.0) / 4.0;
        o.f.denominator.constant = 1.0 + std::round(pos(rng) * 4.0) / 4.0;
        return o;
    };
    const int perLevel = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int k = 0; k < perLevel; ++k) leader.objectives.push_back(objective("f1" + std::to_string(k + 1)));
    for (std::size_t f = 0; f < followers; ++f) {
        for (int k = 0; k < perLevel; ++k) {
            lower[f].objectives.push_back(
                objective("f" + std::to_string(f + 2) + std::to_string(k + 1)));
        }
    }
    p.levels.push_back(std::move(leader));
    for (auto& l : lower) p.levels.push_back(std::move(l));
    return p;
}

}  // namespace fixture
