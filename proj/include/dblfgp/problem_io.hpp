#pragma once

// Line-oriented problem documents:
//
//   problem example1
//   variables x0 x1 x2
//   dm 1 1 controls x0
//   objective f11 min numerator -1 -4 1 constant 1 denominator 2 3 1 constant 2
//   dm 2 1 controls x1
//   ...
//   constraint g1 1 1 1 <= 5
//   goal f11 ideal -0.7 tolerance 0.6 weight 0.769
//   compare baky x 1 0 0 membership 0.46 0.76 0.31 1 0.54 0.52
//
// `objective` lines belong to the preceding `dm`. `#` starts a comment.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dblfgp/membership.hpp"
#include "dblfgp/model.hpp"
#include "dblfgp/session.hpp"

namespace dblfgp {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);
    [[nodiscard]] int line() const { return line_; }
    [[nodiscard]] int column() const { return column_; }
    [[nodiscard]] const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

struct ProblemDocument {
    DBLProblem problem;
    std::vector<GoalOverride> goals;
    std::vector<ComparisonRow> comparisons;

    friend bool operator==(const ProblemDocument&, const ProblemDocument&) = default;
};

ProblemDocument parse_problem(std::string_view text);
std::string serialize_problem(const ProblemDocument& doc);

/// Shortest representation that parses back to the same double.
std::string format_number(double value);
std::optional<double> parse_number(std::string_view token);

/// Text of a fixture shipped with the library, or nothing.
std::optional<std::string_view> bundled_problem(std::string_view name);

/// Reads `nameOrPath` as a bundled fixture name first, then as a file.
std::string load_problem_text(const std::string& nameOrPath);

}  // namespace dblfgp
