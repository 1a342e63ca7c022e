// dblfgp: command-line front end.
//
//   dblfgp validate <file>
//   dblfgp payoff <file> [--format text|csv|json]
//   dblfgp solve <file> [--format text|csv|json]
//   dblfgp interactive <file>
//   dblfgp serve --port <n> [--host <addr>] [--state-dir <dir>]
//
// <file> may also name a bundled fixture such as `example1`.
// Exit codes: 0 success, 1 infeasible or degenerate, 2 input error.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dblfgp/problem_io.hpp"
#include "dblfgp/report_io.hpp"
#include "dblfgp/service.hpp"
#include "dblfgp/session.hpp"

namespace {

using namespace dblfgp;

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kInputError = 2;

ProblemDocument load(const std::string& file) { return parse_problem(load_problem_text(file)); }

int run_validate(const std::string& file) {
    const auto doc = load(file);
    const auto rep = validate(doc.problem);
    std::cout << render_validation(doc.problem, rep);
    return rep.valid() ? kOk : kInfeasible;
}

int run_payoff(const std::string& file, ReportFormat format) {
    const auto doc = load(file);
    const auto rep = validate(doc.problem);
    if (!rep.valid()) {
        std::cerr << render_validation(doc.problem, rep);
        return kInfeasible;
    }
    std::cout << render_payoff(payoff_table(doc.problem), format);
    return kOk;
}

int run_solve(const std::string& file, ReportFormat format) {
    auto doc = load(file);
    SessionState state = start_session(std::move(doc.problem), doc.goals, std::move(doc.comparisons));
    for (const auto& w : state.warnings) std::cerr << "warning: " << w << '\n';
    const Iteration& it = compute_candidate(state);
    const bool failed = it.failed;
    if (!failed) submit_verdict(state, Verdict::accept());
    std::cout << render_report(report(state), format);
    return failed ? kInfeasible : kOk;
}

void print_goals(const SessionState& state) {
    std::cout << "goal       direction   ideal      tolerance  weight\n";
    for (const auto& g : state.goals) {
        char line[160];
        std::snprintf(line, sizeof line, "%-10s %-10s %10.4f %10.4f %8.4f\n", g.label.c_str(),
                      g.direction == GoalDirection::LessType ? "less" : "greater", g.ideal,
                      g.toleranceLimit, g.weight);
        std::cout << line;
    }
}

// revise f11 tolerance 0.3 weight 1 f12 weight 0.9 ...
std::optional<Verdict> parse_revision(std::istringstream& words) {
    std::vector<GoalOverride> changes;
    std::string token;
    while (words >> token) {
        if (token == "tolerance" || token == "weight") {
            if (changes.empty()) return std::nullopt;
            std::string value;
            if (!(words >> value)) return std::nullopt;
            auto v = parse_number(value);
            if (!v) return std::nullopt;
            (token == "tolerance" ? changes.back().toleranceLimit : changes.back().weight) = *v;
        } else {
            changes.push_back(GoalOverride{token, std::nullopt, std::nullopt, std::nullopt});
        }
    }
    return Verdict::revise(std::move(changes));
}

int run_interactive(const std::string& file) {
    auto doc = load(file);
    SessionState state = start_session(std::move(doc.problem), doc.goals, std::move(doc.comparisons));
    std::cout << render_payoff(state.payoff, ReportFormat::Text) << '\n';
    for (const auto& w : state.warnings) std::cout << "warning: " << w << '\n';

    std::string line;
    while (state.status != SessionStatus::Accepted) {
        if (state.status == SessionStatus::AwaitingSolve) {
            print_goals(state);
            const Iteration& it = compute_candidate(state);
            std::cout << '\n' << render_report(report(state), ReportFormat::Text);
            if (it.failed) std::cout << "candidate failed; revise the goals\n";
        }
        std::cout << "\n[accept | revise <goal> [tolerance v] [weight v] ... | quit] > " << std::flush;
        if (!std::getline(std::cin, line)) return kInfeasible;
        std::istringstream words(line);
        std::string command;
        words >> command;
        if (command == "quit" || command == "q") return kInfeasible;
        try {
            if (command == "accept" || command == "a") {
                submit_verdict(state, Verdict::accept());
            } else if (command == "revise" || command == "r") {
                auto verdict = parse_revision(words);
                if (!verdict) {
                    std::cout << "could not parse revision\n";
                    continue;
                }
                submit_verdict(state, *verdict);
            } else if (!command.empty()) {
                std::cout << "unknown command '" << command << "'\n";
            }
        } catch (const std::exception& err) {
            std::cout << "rejected: " << err.what() << '\n';
        }
    }
    std::cout << '\n' << render_report(report(state), ReportFormat::Text);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interactive fuzzy goal programming for bi-level linear-fractional problems"};
    app.require_subcommand(1);

    std::string file;
    std::string formatName = "text";
    const auto formats = CLI::IsMember({"text", "csv", "json"});

    auto* validateCmd = app.add_subcommand("validate", "Check a problem file");
    validateCmd->add_option("file", file, "Problem file or bundled fixture name")->required();

    auto* payoffCmd = app.add_subcommand("payoff", "Individual minima and maxima of every objective");
    payoffCmd->add_option("file", file, "Problem file or bundled fixture name")->required();
    payoffCmd->add_option("--format", formatName, "Output format")->check(formats);

    auto* solveCmd = app.add_subcommand("solve", "Compute one candidate and accept it");
    solveCmd->add_option("file", file, "Problem file or bundled fixture name")->required();
    solveCmd->add_option("--format", formatName, "Output format")->check(formats);

    auto* interactiveCmd = app.add_subcommand("interactive", "Terminal accept/revise loop");
    interactiveCmd->add_option("file", file, "Problem file or bundled fixture name")->required();

    int port = 8080;
    std::string host = "127.0.0.1";
    std::string stateDir;
    auto* serveCmd = app.add_subcommand("serve", "Serve sessions over HTTP");
    serveCmd->add_option("--port", port, "Port")->required();
    serveCmd->add_option("--host", host, "Bind address");
    serveCmd->add_option("--state-dir", stateDir, "Directory for persisted sessions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }
    const ReportFormat format = *parse_report_format(formatName);

    try {
        if (*validateCmd) return run_validate(file);
        if (*payoffCmd) return run_payoff(file, format);
        if (*solveCmd) return run_solve(file, format);
        if (*interactiveCmd) return run_interactive(file);
        if (*serveCmd) {
            std::optional<std::filesystem::path> dir;
            if (!stateDir.empty()) dir = stateDir;
            return run_server(host, port, dir);
        }
    } catch (const ParseError& err) {
        std::cerr << file << ": " << err.what() << '\n';
        return kInputError;
    } catch (const StructuralError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kInputError;
    } catch (const ValidationFailed& err) {
        std::cerr << err.what() << '\n';
        return kInfeasible;
    } catch (const DegenerateGoalError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kInfeasible;
    } catch (const DegeneracyError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kInfeasible;
    } catch (const RegionError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kInfeasible;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kInputError;
    }
    return kOk;
}
