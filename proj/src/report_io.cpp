#include "dblfgp/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "dblfgp/problem_io.hpp"

namespace dblfgp {

using nlohmann::json;

namespace {

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string joined3(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += fixed3(values[i]);
    }
    return out;
}

json decimal_array(const std::vector<double>& values) {
    json arr = json::array();
    for (double v : values) arr.push_back(format_number(v));
    return arr;
}

json named(const std::vector<std::string>& names, const std::vector<double>& values) {
    json obj = json::object();
    for (std::size_t i = 0; i < values.size() && i < names.size(); ++i) {
        obj[names[i]] = format_number(values[i]);
    }
    return obj;
}

const char* direction_name(GoalDirection d) {
    return d == GoalDirection::LessType ? "less" : "greater";
}

std::string goal_name(const FuzzyGoal& g) { return g.label.empty() ? format_id(g.id) : g.label; }

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    return std::nullopt;
}

json to_json(const SolutionReport& report) {
    json out;
    out["problem"] = report.problemName;
    out["status"] = report.status;
    out["variables"] = report.varNames;
    out["goals"] = report.goalLabels;
    out["iterations"] = json::array();
    for (const auto& row : report.rows) {
        json r;
        r["iteration"] = row.iteration;
        r["verdict"] = row.verdict;
        r["failed"] = row.failed;
        if (row.failed) r["failure"] = row.failure;
        r["xF"] = named(report.varNames, row.xF);
        r["x"] = named(report.varNames, row.x);
        r["objectives"] = named(report.goalLabels, row.objectiveValues);
        r["memberships"] = named(report.goalLabels, row.memberships);
        r["lambda"] = {{"upper", format_number(row.lambdaUpper)},
                       {"full", format_number(row.lambdaFull)}};
        out["iterations"].push_back(std::move(r));
    }
    out["comparisons"] = json::array();
    for (const auto& c : report.comparisons) {
        out["comparisons"].push_back({{"label", c.label},
                                      {"x", named(report.varNames, c.x)},
                                      {"memberships", named(report.goalLabels, c.memberships)}});
    }
    return out;
}

std::string render_report(const SolutionReport& report, ReportFormat format) {
    std::ostringstream os;
    switch (format) {
        case ReportFormat::Json:
            os << to_json(report).dump(2) << '\n';
            break;
        case ReportFormat::Csv: {
            os << "section,key,field,name,value\n";
            auto emit = [&](const std::string& section, const std::string& key, const char* field,
                            const std::vector<std::string>& names, const std::vector<double>& values) {
                for (std::size_t i = 0; i < values.size() && i < names.size(); ++i) {
                    os << section << ',' << key << ',' << field << ',' << names[i] << ','
                       << format_number(values[i]) << '\n';
                }
            };
            for (const auto& row : report.rows) {
                const std::string key = std::to_string(row.iteration);
                os << "iteration," << key << ",verdict,," << row.verdict << '\n';
                os << "iteration," << key << ",failed,," << (row.failed ? "true" : "false") << '\n';
                emit("iteration", key, "xF", report.varNames, row.xF);
                emit("iteration", key, "x", report.varNames, row.x);
                emit("iteration", key, "objective", report.goalLabels, row.objectiveValues);
                emit("iteration", key, "membership", report.goalLabels, row.memberships);
                emit("iteration", key, "lambda", {"upper", "full"}, {row.lambdaUpper, row.lambdaFull});
            }
            for (const auto& c : report.comparisons) {
                emit("comparison", c.label, "x", report.varNames, c.x);
                emit("comparison", c.label, "membership", report.goalLabels, c.memberships);
            }
            break;
        }
        case ReportFormat::Text: {
            os << "problem " << (report.problemName.empty() ? "(unnamed)" : report.problemName)
               << " (" << report.status << ")\n";
            os << "variables  ";
            for (const auto& v : report.varNames) os << ' ' << v;
            os << "\ngoals      ";
            for (const auto& g : report.goalLabels) os << ' ' << g;
            os << '\n';
            for (const auto& row : report.rows) {
                os << "\niteration " << row.iteration << " [" << row.verdict << "]\n";
                if (row.failed) {
                    os << "  failed: " << row.failure << '\n';
                    continue;
                }
                os << "  xF          " << joined3(row.xF) << '\n';
                os << "  x           " << joined3(row.x) << '\n';
                os << "  lambda      upper " << fixed3(row.lambdaUpper) << " full "
                   << fixed3(row.lambdaFull) << '\n';
                os << "  objectives  " << joined3(row.objectiveValues) << '\n';
                os << "  memberships " << joined3(row.memberships) << '\n';
            }
            for (const auto& c : report.comparisons) {
                os << "\ncomparison " << c.label << '\n';
                os << "  x           " << joined3(c.x) << '\n';
                os << "  memberships " << joined3(c.memberships) << '\n';
            }
            break;
        }
    }
    return os.str();
}

json to_json(const ValidationReport& report) {
    json out;
    out["valid"] = report.valid();
    out["partition"] = report.partitionMessage;
    out["feasible"] = report.feasible;
    out["denominators"] = json::array();
    for (const auto& d : report.denominators) {
        out["denominators"].push_back(
            {{"objective", d.label}, {"minimum", format_number(d.minimum)}, {"ok", d.ok}});
    }
    out["warnings"] = report.warnings;
    return out;
}

std::string render_validation(const DBLProblem& problem, const ValidationReport& report) {
    std::ostringstream os;
    os << "variables    " << problem.numVars() << '\n';
    os << "constraints  " << problem.constraints.size() << '\n';
    os << "objectives   " << problem.objectives().size() << '\n';
    os << "partition    " << report.partitionMessage << '\n';
    os << "feasible     " << (report.feasible ? "yes" : "no") << '\n';
    for (const auto& d : report.denominators) {
        os << "denominator  " << d.label << " min " << fixed3(d.minimum) << (d.ok ? "" : "  FAIL")
           << '\n';
    }
    for (const auto& w : report.warnings) os << "warning      " << w << '\n';
    os << (report.valid() ? "valid\n" : "invalid\n");
    return os.str();
}

json to_json(const PayoffTable& payoff) {
    json out = json::array();
    for (const auto& e : payoff.entries) {
        out.push_back({{"objective", e.label},
                       {"id", format_id(e.id)},
                       {"sense", e.sense == Sense::Min ? "min" : "max"},
                       {"min", format_number(e.minValue)},
                       {"max", format_number(e.maxValue)},
                       {"argmin", decimal_array(e.argmin)},
                       {"argmax", decimal_array(e.argmax)},
                       {"argminMultiple", e.argminMultiple},
                       {"argmaxMultiple", e.argmaxMultiple}});
    }
    return out;
}

std::string render_payoff(const PayoffTable& payoff, ReportFormat format) {
    std::ostringstream os;
    switch (format) {
        case ReportFormat::Json:
            os << to_json(payoff).dump(2) << '\n';
            break;
        case ReportFormat::Csv:
            os << "objective,sense,min,max,argmin,argmax\n";
            for (const auto& e : payoff.entries) {
                auto vec = [](const std::vector<double>& v) {
                    std::string s;
                    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + format_number(v[i]);
                    return s;
                };
                os << e.label << ',' << (e.sense == Sense::Min ? "min" : "max") << ','
                   << format_number(e.minValue) << ',' << format_number(e.maxValue) << ','
                   << vec(e.argmin) << ',' << vec(e.argmax) << '\n';
            }
            break;
        case ReportFormat::Text:
            os << "objective  sense      min      max  argmin                 argmax\n";
            for (const auto& e : payoff.entries) {
                char line[256];
                std::snprintf(line, sizeof line, "%-10s %-5s %8s %8s  %-22s %s%s\n", e.label.c_str(),
                              e.sense == Sense::Min ? "min" : "max", fixed3(e.minValue).c_str(),
                              fixed3(e.maxValue).c_str(), ("(" + joined3(e.argmin) + ")").c_str(),
                              ("(" + joined3(e.argmax) + ")").c_str(),
                              (e.argminMultiple || e.argmaxMultiple) ? "  *" : "");
                os << line;
            }
            if (std::any_of(payoff.entries.begin(), payoff.entries.end(), [](const PayoffEntry& e) {
                    return e.argminMultiple || e.argmaxMultiple;
                })) {
                os << "* optimum attained at more than one point; the listed vertex was used\n";
            }
            break;
    }
    return os.str();
}

json to_json(const std::vector<FuzzyGoal>& goals) {
    json out = json::array();
    for (const auto& g : goals) {
        out.push_back({{"goal", goal_name(g)},
                       {"id", format_id(g.id)},
                       {"direction", direction_name(g.direction)},
                       {"ideal", format_number(g.ideal)},
                       {"tolerance", format_number(g.toleranceLimit)},
                       {"weight", format_number(g.weight)},
                       {"suggestedWeight", format_number(g.reciprocalWeight())}});
    }
    return out;
}

json to_json(const Iteration& it, const SessionState& state) {
    json out;
    out["iteration"] = it.index;
    out["failed"] = it.failed;
    if (it.failed) out["failure"] = it.failure;
    out["verdict"] = to_string(it.verdict.kind);
    out["xF"] = decimal_array(it.xF);
    out["xS"] = decimal_array(it.xS);
    out["lambdaUpper"] = format_number(it.lambdaUpper);
    out["lambdaFull"] = format_number(it.lambdaFull);
    std::vector<std::string> labels;
    for (const auto& g : it.goalsSnapshot) labels.push_back(goal_name(g));
    out["memberships"] = named(labels, it.memberships);
    out["objectives"] = named(labels, it.objectiveValues);
    out["goals"] = to_json(it.goalsSnapshot);
    out["linearizations"] = json::array();
    for (std::size_t k = 0; k < it.linearizations.size(); ++k) {
        const auto& lin = it.linearizations[k];
        out["linearizations"].push_back({{"goal", k < labels.size() ? labels[k] : format_id(lin.id)},
                                         {"point", decimal_array(lin.expansionPoint)},
                                         {"constant", format_number(lin.affine.constant)},
                                         {"coefficients", decimal_array(lin.affine.coeffs)},
                                         {"pointNotUnique", lin.pointNotUnique}});
    }
    out["variables"] = state.problem.varNames;
    return out;
}

}  // namespace dblfgp
