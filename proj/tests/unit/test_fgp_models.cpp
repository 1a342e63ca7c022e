#include <doctest.h>

#include <random>

#include "dblfgp/fgp_models.hpp"
#include "dblfgp/fractional.hpp"
#include "dblfgp/linearize.hpp"
#include "support/checks.hpp"
#include "support/fixtures.hpp"

using namespace dblfgp;

namespace {

struct Example {
    DBLProblem problem;
    PayoffTable payoff;
    std::vector<FuzzyGoal> goals;
    std::vector<LinearizedMembership> lins;
    std::vector<FuzzyGoal> upperGoals;
};

Example example() {
    const auto state = fixture::example1_session();
    Example e{state.problem, state.payoff, state.goals, {}, {}};
    e.lins = linearize_goals(e.problem, e.goals, &e.payoff);
    for (const auto& g : e.goals) {
        if (g.id.level == 1) e.upperGoals.push_back(g);
    }
    return e;
}

CandidateSolution solve(const FgpModel& m, const Example& e, std::span<const FuzzyGoal> goals) {
    const auto sol = solve_lp(m.lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    auto cand = extract_solution(m, sol, e.problem, goals);
    REQUIRE(cand);
    CHECK(checks::max_min_invariants(m, sol, *cand).empty());
    return *cand;
}

}  // namespace

TEST_CASE("weighted sum") {
    SUBCASE("single goal") {
        LinearizedMembership lin{{1, 1, 1}, {0.0}, {{-1.0}, 1.0}, false};
        std::vector<LinearConstraint> s{{"ub", {1.0}, Relation::LE, 1.0}};
        const std::vector<double> w{1.0};
        const auto m = build_weighted_sum(std::span(&lin, 1), w, s);
        const auto sol = solve_lp(m.lp);
        REQUIRE(sol.status == LpStatus::Optimal);
        CHECK(sol.x[0] == doctest::Approx(0.0));
        CHECK(sol.objectiveValue == doctest::Approx(1.0));
    }
    SUBCASE("example with equal weights") {
        const auto e = example();
        const std::vector<double> w(6, 1.0 / 6.0);
        const auto m = build_weighted_sum(e.lins, w, e.problem.constraints);
        const auto sol = solve_lp(m.lp);
        REQUIRE(sol.status == LpStatus::Optimal);
        const std::vector<double> x(sol.x.begin(), sol.x.begin() + 3);
        CHECK(e.problem.feasible(x));
        for (const auto& mu : m.memberships) CHECK(mu(x) <= 1.0 + 1e-7);
    }
    SUBCASE("scaling before normalization") {
        const auto e = example();
        std::mt19937_64 rng(2);
        std::uniform_real_distribution<double> d(0.1, 1.0);
        std::vector<double> raw(6);
        for (double& v : raw) v = d(rng);
        auto normalized = [](std::vector<double> v) {
            double s = 0.0;
            for (double x : v) s += x;
            for (double& x : v) x /= s;
            return v;
        };
        auto scaled = raw;
        for (double& v : scaled) v *= 37.5;
        const auto a = solve_lp(build_weighted_sum(e.lins, normalized(raw), e.problem.constraints).lp);
        const auto b = solve_lp(build_weighted_sum(e.lins, normalized(scaled), e.problem.constraints).lp);
        for (std::size_t j = 0; j < 3; ++j) CHECK(a.x[j] == doctest::Approx(b.x[j]).epsilon(1e-9));
    }
    SUBCASE("unnormalized weights are rejected") {
        const auto e = example();
        const std::vector<double> w(6, 0.2);
        CHECK_THROWS_AS((void)build_weighted_sum(e.lins, w, e.problem.constraints), ModelError);
        std::vector<double> neg(6, 0.25);
        neg[0] = -0.25;
        CHECK_THROWS_AS((void)build_weighted_sum(e.lins, neg, e.problem.constraints), ModelError);
    }
}

TEST_CASE("upper-level model") {
    const auto e = example();
    const auto m = build_upper_fgp(e.lins, e.upperGoals, e.problem.constraints);
    CHECK(m.kind == ModelKind::UpperLevel);
    CHECK(m.goalIds.size() == 2);
    CHECK(m.roles.deviations.size() == 2);
    const auto cand = solve(m, e, e.upperGoals);
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(cand.x[j] - fixture::kXF[j]) <= 0.05);

    const double oracle = checks::lifted_lambda_oracle(m.memberships, m.weights, e.problem.constraints);
    CHECK(cand.lambda == doctest::Approx(oracle).epsilon(1e-7));

    CHECK_THROWS_AS((void)build_upper_fgp(e.lins, e.goals, e.problem.constraints), ModelError);
}

TEST_CASE("saturated goal") {
    LinearizedMembership lin{{1, 1, 1}, {0.0, 0.0}, {{0.0, 0.0}, 1.0}, false};
    FuzzyGoal g;
    g.id = {1, 1, 1};
    g.label = "g";
    g.ideal = 0.0;
    g.toleranceLimit = 1.0;
    g.weight = 1.0;
    std::vector<LinearConstraint> s{{"ub", {1.0, 1.0}, Relation::LE, 2.0}};
    const auto m = build_upper_fgp(std::span(&lin, 1), std::span(&g, 1), s);
    const auto sol = solve_lp(m.lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.x[*m.roles.lambda] == doctest::Approx(1.0));
    CHECK(sol.x[m.roles.deviations[0]] == doctest::Approx(0.0));
}

TEST_CASE("full-hierarchy model") {
    const auto e = example();
    const std::vector<double> xF{1.25, 0.31, 0.0};
    const auto m = build_full_fgp(e.lins, e.goals, e.problem.constraints, xF, e.problem.upperVariables());
    CHECK(m.kind == ModelKind::FullHierarchy);
    CHECK(m.fixedVars.size() == 1);
    CHECK(m.fixedVars.at(0) == 1.25);
    const auto cand = solve(m, e, e.goals);
    CHECK(cand.x[0] == 1.25);
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(cand.x[j] - fixture::kXS[j]) <= 0.05);

    const double oracle = checks::lifted_lambda_oracle(m.memberships, m.weights, e.problem.constraints,
                                                       {{0, 1.25}});
    CHECK(cand.lambda == doctest::Approx(oracle).epsilon(1e-7));

    // lambda < 1 here, so it equals the smallest mu~/w.
    REQUIRE(cand.lambda < 1.0);
    double ratio = 1.0;
    for (std::size_t g = 0; g < m.weights.size(); ++g) ratio = std::min(ratio, m.memberships[g](cand.x) / m.weights[g]);
    CHECK(cand.lambda == doctest::Approx(ratio).epsilon(1e-9));

    // Memberships that agree with the reference row; f21 and f32 are
    // checked in the acceptance run.
    for (std::size_t k : {0u, 1u, 3u, 4u}) {
        CHECK(std::abs(cand.memberships[k] - fixture::kMembershipsAtXS[k]) <= 0.05);
    }
    for (std::size_t k : {0u, 1u, 3u, 4u, 5u}) {
        CHECK(std::abs(cand.objectiveValues[k] - fixture::kObjectivesAtXS[k]) <= 0.05);
    }
    // A membership of 0.47 for f21 corresponds to f21 = 1.3 - 0.47 * 1.8 = +0.454.
    CHECK(std::abs(cand.objectiveValues[2] - 0.454) <= 0.05);
    CHECK(std::abs(cand.memberships[2] - fixture::kMembershipsAtXS[2]) <= 0.05);
}

TEST_CASE("fixing every variable") {
    const auto e = example();
    const std::vector<double> x{1.0, 0.5, 0.25};
    REQUIRE(e.problem.feasible(x));
    const std::vector<std::size_t> all{0, 1, 2};
    const auto m = build_full_fgp(e.lins, e.goals, e.problem.constraints, x, all);
    const auto sol = solve_lp(m.lp);
    double expected = 1.0;
    for (std::size_t g = 0; g < m.weights.size(); ++g) {
        expected = std::min(expected, std::min(1.0, m.memberships[g](x) / m.weights[g]));
    }
    if (expected < 0.0) {
        CHECK(sol.status == LpStatus::Infeasible);
    } else {
        REQUIRE(sol.status == LpStatus::Optimal);
        CHECK(sol.x[*m.roles.lambda] == doctest::Approx(expected).epsilon(1e-9));
        for (std::size_t j = 0; j < 3; ++j) CHECK(sol.x[j] == x[j]);
    }
}

TEST_CASE("infeasible pinning") {
    const auto e = example();
    const std::vector<double> xF{4.5, 0.0, 0.0};
    const auto m = build_full_fgp(e.lins, e.goals, e.problem.constraints, xF, e.problem.upperVariables());
    const auto sol = solve_lp(m.lp);
    CHECK(sol.status == LpStatus::Infeasible);
    CHECK_FALSE(extract_solution(m, sol, e.problem, e.goals).has_value());
}

TEST_CASE("all-zero objectives are stopped before model building") {
    auto p = fixture::example1().problem;
    for (auto& level : p.levels) {
        for (auto& o : level.objectives) o.f.numerator = {{0.0, 0.0, 0.0}, 0.0};
    }
    const auto payoff = payoff_table(p);
    CHECK_THROWS_AS((void)default_goals(payoff), DegenerateGoalError);
}

TEST_CASE("invariants on random instances") {
    const auto r = checks::random_instances(50, 77);
    CHECK(r.instances == 50);
    for (const auto& v : r.violations) FAIL_CHECK(v);
}
