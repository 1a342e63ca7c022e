#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "dblfgp/problem_io.hpp"
#include "dblfgp/report_io.hpp"
#include "dblfgp/session_io.hpp"
#include "support/fixtures.hpp"

using namespace dblfgp;

namespace {

ProblemDocument random_document(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> any(-1e3, 1e3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ProblemDocument doc;
    doc.problem = fixture::random_problem(rng);
    doc.problem.name = "doc" + std::to_string(rng() % 1000);
    // Full-precision values exercise the shortest round-trip printing.
    for (auto& c : doc.problem.constraints) c.rhs += unit(rng) * 1e-7;
    for (auto& level : doc.problem.levels) {
        for (auto& o : level.objectives) {
            o.f.numerator.constant = any(rng);
            o.f.denominator.coeffs[0] = unit(rng) / 3.0;
        }
    }
    if (unit(rng) < 0.5) doc.problem.constraints.push_back({"eq", std::vector<double>(doc.problem.numVars(), 1e-300), Relation::EQ, 0.0});
    for (const auto& ref : doc.problem.objectives()) {
        if (unit(rng) < 0.5) continue;
        GoalOverride g{ref.objective->label, std::nullopt, std::nullopt, std::nullopt};
        if (unit(rng) < 0.5) g.ideal = any(rng);
        if (unit(rng) < 0.5) g.toleranceLimit = -0.0;
        if (unit(rng) < 0.5) g.weight = 1.0 / 3.0;
        doc.goals.push_back(g);
    }
    if (unit(rng) < 0.5) {
        ComparisonRow row{"other", std::vector<double>(doc.problem.numVars(), 0.1),
                          std::vector<double>(doc.problem.objectives().size(), 0.7)};
        doc.comparisons.push_back(row);
    }
    return doc;
}

void expect_parse_error(const std::string& text, int line, const std::string& fragment) {
    try {
        (void)parse_problem(text);
        FAIL("no parse error for: " << text);
    } catch (const ParseError& err) {
        CHECK(err.line() == line);
        CHECK(err.column() >= 1);
        CHECK_MESSAGE(err.message().find(fragment) != std::string::npos, err.what());
    }
}

const char* kHeader =
    "variables a b\n"
    "dm 1 1 controls a\n"
    "objective f11 min numerator 1 0 constant 0 denominator 0 0 constant 1\n";

}  // namespace

TEST_CASE("bundled example") {
    const auto doc = fixture::example1();
    CHECK(doc.problem.name == "example1");
    CHECK(doc.problem.numVars() == 3);
    CHECK(doc.problem.constraints.size() == 6);
    CHECK(doc.problem.objectives().size() == 6);
    CHECK(doc.problem.levels.size() == 3);
    REQUIRE(doc.goals.size() == 6);
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(*doc.goals[k].ideal == fixture::kIdeal[k]);
        CHECK(*doc.goals[k].toleranceLimit == fixture::kTolerance[k]);
        CHECK(*doc.goals[k].weight == fixture::kWeight[k]);
    }
    REQUIRE(doc.comparisons.size() == 1);
    CHECK(doc.comparisons[0].x == std::vector<double>{1.0, 0.0, 0.0});
    for (std::size_t k = 0; k < 6; ++k) CHECK(doc.comparisons[0].memberships[k] == fixture::kComparisonMemberships[k]);
    CHECK_FALSE(bundled_problem("nope"));
}

TEST_CASE("parse errors carry locations") {
    expect_parse_error(std::string(kHeader) + "dm 2 1 controls b\n", 4, "level requires at least one objective");
    expect_parse_error(std::string(kHeader) + "dm 2 1 controls b\ndm 2 2 controls\n"
                                              "objective g min numerator 1 1 constant 0 denominator 0 0 constant 1\n",
                       4, "level requires at least one objective");
    expect_parse_error(std::string(kHeader) + "dm 2 1 controls c\n", 4, "unknown variable 'c'");
    expect_parse_error(std::string(kHeader) + "dm 2 1 controls a b\n", 4, "duplicate controlled variable 'a'");
    expect_parse_error(std::string(kHeader) +
                           "dm 2 1 controls b\n"
                           "objective f21 min numerator 1 0 2 constant 0 denominator 0 0 constant 1\n",
                       5, "too many coefficients");
    expect_parse_error(std::string(kHeader) +
                           "dm 2 1 controls b\n"
                           "objective f21 min numerator 1 constant 0 denominator 0 0 constant 1\n",
                       5, "numerator");
    expect_parse_error(std::string(kHeader) + "constraint g 1 <= 2\n", 4, "constraint");
    expect_parse_error(std::string(kHeader) + "constraint g 1 1 < 2\n", 4, "'<='");
    expect_parse_error(std::string(kHeader) + "frobnicate\n", 4, "unknown keyword");
    expect_parse_error(std::string(kHeader) + "dm 2 1 controls b\n"
                                              "objective f21 min numerator 1 0 constant x denominator 0 0 constant 1\n",
                       5, "numerator constant");
    expect_parse_error("variables a\n", 1, "level-1");

    try {
        (void)parse_problem("variables a b\ndm 1 1 controls a zz\n");
    } catch (const ParseError& err) {
        CHECK(err.line() == 2);
        CHECK(err.column() == 19);
    }
}

TEST_CASE("comments and blank lines") {
    const std::string text = std::string("# leading comment\n\n") + kHeader +
                             "dm 2 1 controls b   # trailing\n"
                             "objective f21 max numerator 0 1 constant 0 denominator 0 0 constant 1\n"
                             "constraint c 1 1 <= 3\n";
    const auto doc = parse_problem(text);
    CHECK(doc.problem.levels.size() == 2);
    CHECK(doc.problem.levels[1].objectives[0].sense == Sense::Max);
}

TEST_CASE("numbers") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1.0 / 3.0) == "0.3333333333333333");
    CHECK(format_number(-0.0) == "-0");
    CHECK(*parse_number("+1.5") == 1.5);
    CHECK(*parse_number("1e-3") == 0.001);
    CHECK_FALSE(parse_number("nan"));
    CHECK_FALSE(parse_number("inf"));
    CHECK_FALSE(parse_number("1.5x"));
    CHECK_FALSE(parse_number(""));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double v = d(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
        CHECK(*parse_number(format_number(v)) == v);
    }
}

TEST_CASE("parse and serialize round-trip") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 100; ++i) {
        const auto doc = random_document(rng);
        const auto text = serialize_problem(doc);
        const auto back = parse_problem(text);
        CHECK(back == doc);
        CHECK(serialize_problem(back) == text);
    }
    const auto ex = fixture::example1();
    CHECK(parse_problem(serialize_problem(ex)) == ex);
}

TEST_CASE("session documents") {
    auto state = fixture::example1_session();
    CHECK(parse_session(serialize_session(state)) == state);
    (void)compute_candidate(state);
    submit_verdict(state, Verdict::revise({{"f31", std::nullopt, -0.74, std::nullopt}}));
    (void)compute_candidate(state);  // fails
    submit_verdict(state, Verdict::revise({{"f31", std::nullopt, -0.05, 1.43}}));
    (void)compute_candidate(state);
    submit_verdict(state, Verdict::accept());
    const auto text = serialize_session(state);
    CHECK(parse_session(text) == state);
    CHECK_THROWS_AS((void)parse_session("session 2\n"), ParseError);
    CHECK_THROWS_AS((void)parse_session(text.substr(0, text.size() / 2)), ParseError);
}

TEST_CASE("reports") {
    auto state = fixture::example1_session();
    (void)compute_candidate(state);
    submit_verdict(state, Verdict::accept());
    const auto rep = report(state);

    SUBCASE("text") {
        const auto text = render_report(rep, ReportFormat::Text);
        std::istringstream in(text);
        std::string line;
        std::vector<double> row;
        while (std::getline(in, line)) {
            if (line.rfind("  memberships", 0) == 0) {
                std::istringstream words(line.substr(13));
                double v;
                while (words >> v) row.push_back(v);
                break;
            }
        }
        REQUIRE(row.size() == 6);
        for (std::size_t k = 0; k < 6; ++k) CHECK(std::abs(row[k] - rep.rows[0].memberships[k]) <= 5e-4 + 1e-12);
        CHECK(text.find("comparison baky") != std::string::npos);
        CHECK(render_report(rep, ReportFormat::Text) == text);
    }
    SUBCASE("csv matches json") {
        const auto csv = render_report(rep, ReportFormat::Csv);
        const auto j = nlohmann::json::parse(render_report(rep, ReportFormat::Json));
        std::istringstream in(csv);
        std::string line;
        std::getline(in, line);
        CHECK(line == "section,key,field,name,value");
        int compared = 0;
        const std::map<std::string, std::string> fields{{"xF", "xF"}, {"x", "x"}, {"objective", "objectives"},
                                                        {"membership", "memberships"}, {"lambda", "lambda"}};
        while (std::getline(in, line)) {
            std::vector<std::string> cells;
            std::istringstream cs(line);
            std::string cell;
            while (std::getline(cs, cell, ',')) cells.push_back(cell);
            if (cells.size() == 4) cells.emplace_back();
            REQUIRE(cells.size() == 5);
            nlohmann::json node;
            if (cells[0] == "iteration") {
                node = j["iterations"][std::stoi(cells[1]) - 1];
            } else {
                for (const auto& c : j["comparisons"]) {
                    if (c["label"] == cells[1]) node = c;
                }
            }
            if (cells[2] == "verdict") {
                CHECK(node["verdict"] == cells[4]);
                continue;
            }
            if (cells[2] == "failed") {
                CHECK(node["failed"].get<bool>() == (cells[4] == "true"));
                continue;
            }
            const auto& value = node[fields.at(cells[2])][cells[3]];
            CHECK(*parse_number(value.get<std::string>()) == *parse_number(cells[4]));
            ++compared;
        }
        CHECK(compared == 3 + 3 + 6 + 6 + 2 + 3 + 6);
    }
    SUBCASE("deterministic") {
        for (auto f : {ReportFormat::Text, ReportFormat::Csv, ReportFormat::Json}) {
            CHECK(render_report(report(state), f) == render_report(rep, f));
        }
    }
}

TEST_CASE("payoff and validation rendering") {
    const auto doc = fixture::example1();
    const auto payoff = payoff_table(doc.problem);
    const auto j = nlohmann::json::parse(render_payoff(payoff, ReportFormat::Json));
    CHECK(j.dump().find("f21") != std::string::npos);
    CHECK(render_payoff(payoff, ReportFormat::Text).find("f32") != std::string::npos);
    CHECK(render_payoff(payoff, ReportFormat::Csv).find("f11") != std::string::npos);
    const auto text = render_validation(doc.problem, validate(doc.problem));
    CHECK(text.find("f31") != std::string::npos);
    CHECK(parse_report_format("json") == ReportFormat::Json);
    CHECK_FALSE(parse_report_format("xml"));
}
