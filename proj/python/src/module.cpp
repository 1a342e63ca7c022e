#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dblfgp/fractional.hpp"
#include "dblfgp/membership.hpp"
#include "dblfgp/problem_io.hpp"
#include "dblfgp/report_io.hpp"
#include "dblfgp/session.hpp"
#include "dblfgp/session_io.hpp"

namespace py = pybind11;
using namespace dblfgp;

namespace {

ReportFormat format_of(const std::string& name) {
    auto f = parse_report_format(name);
    if (!f) throw py::value_error("format must be text, csv or json");
    return *f;
}

// {"f11": {"tolerance": 0.3, "weight": 1.0}, ...}
std::vector<GoalOverride> overrides_of(const py::dict& changes) {
    std::vector<GoalOverride> out;
    for (const auto& [key, value] : changes) {
        GoalOverride edit{py::cast<std::string>(key), std::nullopt, std::nullopt, std::nullopt};
        for (const auto& [field, v] : py::cast<py::dict>(value)) {
            const auto name = py::cast<std::string>(field);
            const double x = py::cast<double>(v);
            if (name == "ideal") edit.ideal = x;
            else if (name == "tolerance") edit.toleranceLimit = x;
            else if (name == "weight") edit.weight = x;
            else throw py::key_error("unknown goal field '" + name + "'");
        }
        out.push_back(std::move(edit));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Interactive fuzzy goal programming for bi-level linear-fractional problems";

    auto base = py::register_local_exception<std::runtime_error>(m, "DblfgpError");
    py::register_local_exception<ParseError>(m, "ParseError", base);
    py::register_local_exception<InvalidTransition>(m, "InvalidTransition", base);
    py::register_local_exception<InvalidRevision>(m, "InvalidRevision", base);
    py::register_local_exception<ValidationFailed>(m, "ValidationFailed", base);
    py::register_local_exception<DegenerateGoalError>(m, "DegenerateGoalError", base);
    py::register_local_exception<DegeneracyError>(m, "DegeneracyError", base);

    py::enum_<SessionStatus>(m, "SessionStatus")
        .value("AWAITING_SOLVE", SessionStatus::AwaitingSolve)
        .value("AWAITING_VERDICT", SessionStatus::AwaitingVerdict)
        .value("ACCEPTED", SessionStatus::Accepted);

    py::class_<DBLProblem>(m, "Problem")
        .def_readonly("name", &DBLProblem::name)
        .def_readonly("variables", &DBLProblem::varNames)
        .def_property_readonly("objectives",
                               [](const DBLProblem& p) {
                                   std::vector<std::string> out;
                                   for (const auto& ref : p.objectives()) out.push_back(ref.objective->label);
                                   return out;
                               })
        .def("feasible", [](const DBLProblem& p, const std::vector<double>& x) { return p.feasible(x); })
        .def("evaluate",
             [](const DBLProblem& p, const std::vector<double>& x) {
                 std::vector<double> out;
                 for (const auto& ref : p.objectives()) out.push_back(evaluate(ref.objective->f, x));
                 return out;
             },
             "Objective values at x, in level order.");

    py::class_<ProblemDocument>(m, "Document")
        .def_readonly("problem", &ProblemDocument::problem)
        .def("serialize", [](const ProblemDocument& d) { return serialize_problem(d); });

    m.def("parse_problem", [](const std::string& text) { return parse_problem(text); });
    m.def("load_problem", [](const std::string& nameOrPath) { return parse_problem(load_problem_text(nameOrPath)); },
          "Bundled fixture name or path to a problem file.");
    m.def("validate", [](const DBLProblem& p) { return to_json(validate(p)).dump(); },
          "Validation report as JSON text.");
    m.def("payoff_table",
          [](const DBLProblem& p, const std::string& format) { return render_payoff(payoff_table(p), format_of(format)); },
          py::arg("problem"), py::arg("format") = "json");

    py::class_<FuzzyGoal>(m, "Goal")
        .def_readonly("label", &FuzzyGoal::label)
        .def_readonly("ideal", &FuzzyGoal::ideal)
        .def_readonly("tolerance", &FuzzyGoal::toleranceLimit)
        .def_readonly("weight", &FuzzyGoal::weight)
        .def_property_readonly("less_type", [](const FuzzyGoal& g) { return g.direction == GoalDirection::LessType; });

    py::class_<Iteration>(m, "Iteration")
        .def_readonly("index", &Iteration::index)
        .def_readonly("failed", &Iteration::failed)
        .def_readonly("failure", &Iteration::failure)
        .def_readonly("xF", &Iteration::xF)
        .def_readonly("xS", &Iteration::xS)
        .def_readonly("lambda_upper", &Iteration::lambdaUpper)
        .def_readonly("lambda_full", &Iteration::lambdaFull)
        .def_readonly("memberships", &Iteration::memberships)
        .def_readonly("objectives", &Iteration::objectiveValues)
        .def_property_readonly("verdict", [](const Iteration& it) { return std::string(to_string(it.verdict.kind)); });

    py::class_<SessionState>(m, "Session")
        .def(py::init([](const ProblemDocument& doc, const py::dict& overrides) {
                 auto goals = doc.goals;
                 for (auto& o : overrides_of(overrides)) goals.push_back(std::move(o));
                 return start_session(doc.problem, goals, doc.comparisons);
             }),
             py::arg("document"), py::arg("overrides") = py::dict())
        .def_readonly("problem", &SessionState::problem)
        .def_readonly("status", &SessionState::status)
        .def_readonly("goals", &SessionState::goals)
        .def_readonly("history", &SessionState::history)
        .def_readonly("warnings", &SessionState::warnings)
        .def("solve", [](SessionState& s) { return compute_candidate(s); }, "Compute the next candidate.")
        .def("accept", [](SessionState& s) { submit_verdict(s, Verdict::accept()); })
        .def("revise", [](SessionState& s, const py::dict& changes) { submit_verdict(s, Verdict::revise(overrides_of(changes))); },
             py::arg("changes"))
        .def("report", [](const SessionState& s, const std::string& format) { return render_report(report(s), format_of(format)); },
             py::arg("format") = "json")
        .def("serialize", [](const SessionState& s) { return serialize_session(s); })
        .def_static("parse", [](const std::string& text) { return parse_session(text); });

    m.def("membership_value",
          [](double ideal, double tolerance, double fval) {
              FuzzyGoal g;
              g.direction = tolerance >= ideal ? GoalDirection::LessType : GoalDirection::GreaterType;
              g.ideal = ideal;
              g.toleranceLimit = tolerance;
              return membership_value(g, fval);
          },
          py::arg("ideal"), py::arg("tolerance"), py::arg("value"));
}
