#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dblfgp/fractional.hpp"
#include "dblfgp/membership.hpp"
#include "dblfgp/model.hpp"
#include "dblfgp/session.hpp"

namespace dblfgp {

enum class ReportFormat { Text, Csv, Json };

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// Text mode rounds to three decimals; csv and json carry every number as
/// its shortest round-trip decimal string.
std::string render_report(const SolutionReport& report, ReportFormat format);

std::string render_validation(const DBLProblem& problem, const ValidationReport& report);
std::string render_payoff(const PayoffTable& payoff, ReportFormat format);

// Structured views shared by the CLI and the HTTP service. Numbers are
// decimal strings.
nlohmann::json to_json(const PayoffTable& payoff);
nlohmann::json to_json(const std::vector<FuzzyGoal>& goals);
nlohmann::json to_json(const Iteration& it, const SessionState& state);
nlohmann::json to_json(const SolutionReport& report);
nlohmann::json to_json(const ValidationReport& report);

}  // namespace dblfgp
