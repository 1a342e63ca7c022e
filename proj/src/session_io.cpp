#include "dblfgp/session_io.hpp"

#include <sstream>

#include "dblfgp/problem_io.hpp"
#include "text_lines.hpp"

namespace dblfgp {

namespace {

using detail::Line;
using detail::TokenCursor;

void numbers_out(std::ostream& os, const std::vector<double>& v) {
    for (double x : v) os << ' ' << format_number(x);
}

std::string single_line(std::string s) {
    for (char& c : s) {
        if (c == '\n' || c == '\r' || c == '#') c = ' ';
    }
    return s;
}

void id_out(std::ostream& os, const ObjectiveId& id) {
    os << ' ' << id.level << ' ' << id.dm << ' ' << id.index;
}

void goal_out(std::ostream& os, const char* keyword, const FuzzyGoal& g) {
    os << keyword << ' ' << g.label;
    id_out(os, g.id);
    os << (g.direction == GoalDirection::LessType ? " less" : " greater") << " ideal "
       << format_number(g.ideal) << " tolerance " << format_number(g.toleranceLimit) << " weight "
       << format_number(g.weight) << '\n';
}

ObjectiveId read_id(TokenCursor& cur) {
    ObjectiveId id;
    id.level = static_cast<int>(cur.integer("level"));
    id.dm = static_cast<int>(cur.integer("decision maker"));
    id.index = static_cast<int>(cur.integer("objective index"));
    return id;
}

bool read_flag(TokenCursor& cur) {
    const long v = cur.integer("flag");
    if (v != 0 && v != 1) cur.failAtPrevious("flag must be 0 or 1");
    return v == 1;
}

FuzzyGoal read_goal(TokenCursor& cur) {
    FuzzyGoal g;
    g.label = std::string(cur.word("goal label"));
    g.id = read_id(cur);
    const auto dir = cur.word("direction");
    if (dir == "less") g.direction = GoalDirection::LessType;
    else if (dir == "greater") g.direction = GoalDirection::GreaterType;
    else cur.failAtPrevious("expected 'less' or 'greater'");
    cur.expect("ideal");
    g.ideal = cur.number("ideal");
    cur.expect("tolerance");
    g.toleranceLimit = cur.number("tolerance");
    cur.expect("weight");
    g.weight = cur.number("weight");
    return g;
}

std::vector<double> read_rest_numbers(TokenCursor& cur, const char* what) {
    std::vector<double> out;
    while (!cur.done()) out.push_back(cur.number(what));
    return out;
}

SessionStatus parse_status(TokenCursor& cur) {
    const auto s = cur.word("status");
    if (s == "awaiting-solve") return SessionStatus::AwaitingSolve;
    if (s == "awaiting-verdict") return SessionStatus::AwaitingVerdict;
    if (s == "accepted") return SessionStatus::Accepted;
    cur.failAtPrevious("unknown status '" + std::string(s) + "'");
}

VerdictKind parse_verdict(TokenCursor& cur) {
    const auto s = cur.word("verdict");
    if (s == "pending") return VerdictKind::Pending;
    if (s == "accepted") return VerdictKind::Accepted;
    if (s == "revised") return VerdictKind::Revised;
    cur.failAtPrevious("unknown verdict '" + std::string(s) + "'");
}

}  // namespace

std::string serialize_session(const SessionState& state) {
    std::ostringstream os;
    os << "session 1\n";
    os << "status " << to_string(state.status) << '\n';
    os << "problem-begin\n";
    os << serialize_problem(ProblemDocument{state.problem, {}, state.comparisons});
    os << "problem-end\n";
    for (const auto& w : state.warnings) os << "warning " << single_line(w) << '\n';
    for (const auto& e : state.payoff.entries) {
        os << "payoff " << e.label;
        id_out(os, e.id);
        os << (e.sense == Sense::Min ? " min " : " max ") << format_number(e.minValue) << ' '
           << format_number(e.maxValue) << " argmin";
        numbers_out(os, e.argmin);
        os << " argmax";
        numbers_out(os, e.argmax);
        os << " multiple " << e.argminMultiple << ' ' << e.argmaxMultiple << '\n';
    }
    for (const auto& g : state.goals) goal_out(os, "goal", g);
    for (const auto& it : state.history) {
        os << "iteration " << it.index << " verdict " << to_string(it.verdict.kind) << '\n';
        for (const auto& c : it.verdict.changes) {
            os << "change " << c.label;
            if (c.ideal) os << " ideal " << format_number(*c.ideal);
            if (c.toleranceLimit) os << " tolerance " << format_number(*c.toleranceLimit);
            if (c.weight) os << " weight " << format_number(*c.weight);
            os << '\n';
        }
        for (const auto& g : it.goalsSnapshot) goal_out(os, "snapshot", g);
        for (const auto& lin : it.linearizations) {
            os << "linearization";
            id_out(os, lin.id);
            os << " unique " << (lin.pointNotUnique ? 0 : 1) << " constant "
               << format_number(lin.affine.constant) << " coefficients";
            numbers_out(os, lin.affine.coeffs);
            os << " point";
            numbers_out(os, lin.expansionPoint);
            os << '\n';
        }
        if (it.failed) os << "failed " << single_line(it.failure) << '\n';
        os << "xF";
        numbers_out(os, it.xF);
        os << "\nxS";
        numbers_out(os, it.xS);
        os << "\nlambda " << format_number(it.lambdaUpper) << ' ' << format_number(it.lambdaFull);
        os << "\nmemberships";
        numbers_out(os, it.memberships);
        os << "\nobjectives";
        numbers_out(os, it.objectiveValues);
        os << "\nend-iteration\n";
    }
    return os.str();
}

SessionState parse_session(std::string_view text) {
    const auto lines = detail::split_lines(text);
    SessionState state;
    bool header = false;
    bool inProblem = false;
    bool haveProblem = false;
    std::string problemText;
    Iteration* current = nullptr;

    for (const auto& line : lines) {
        TokenCursor cur(line);
        if (inProblem) {
            if (line.tokens.front().text == "problem-end") {
                inProblem = false;
                auto doc = parse_problem(problemText);
                state.problem = std::move(doc.problem);
                state.comparisons = std::move(doc.comparisons);
                haveProblem = true;
            } else {
                problemText.append(line.raw).push_back('\n');
            }
            continue;
        }
        const auto keyword = cur.word("a keyword");
        if (!header) {
            if (keyword != "session") cur.failAtPrevious("not a session document");
            if (cur.integer("format version") != 1) cur.failAtPrevious("unsupported session version");
            header = true;
        } else if (keyword == "status") {
            state.status = parse_status(cur);
        } else if (keyword == "problem-begin") {
            if (haveProblem) cur.failAtPrevious("problem given twice");
            inProblem = true;
        } else if (keyword == "warning") {
            state.warnings.push_back(cur.rest());
        } else if (keyword == "payoff") {
            if (!haveProblem) cur.failAtPrevious("payoff before problem");
            const std::size_t n = state.problem.numVars();
            PayoffEntry e;
            e.label = std::string(cur.word("objective label"));
            e.id = read_id(cur);
            const auto sense = cur.word("sense");
            if (sense == "min") e.sense = Sense::Min;
            else if (sense == "max") e.sense = Sense::Max;
            else cur.failAtPrevious("expected 'min' or 'max'");
            e.minValue = cur.number("minimum");
            e.maxValue = cur.number("maximum");
            cur.expect("argmin");
            e.argmin = cur.numbers(n, "argmin");
            cur.expect("argmax");
            e.argmax = cur.numbers(n, "argmax");
            cur.expect("multiple");
            e.argminMultiple = read_flag(cur);
            e.argmaxMultiple = read_flag(cur);
            state.payoff.entries.push_back(std::move(e));
        } else if (keyword == "goal") {
            state.goals.push_back(read_goal(cur));
        } else if (keyword == "iteration") {
            if (current) cur.failAtPrevious("iteration not closed");
            state.history.emplace_back();
            current = &state.history.back();
            current->index = static_cast<int>(cur.integer("iteration index"));
            cur.expect("verdict");
            current->verdict.kind = parse_verdict(cur);
        } else if (keyword == "end-iteration") {
            if (!current) cur.failAtPrevious("end-iteration without iteration");
            current = nullptr;
        } else if (current == nullptr) {
            cur.failAtPrevious("unknown keyword '" + std::string(keyword) + "'");
        } else if (keyword == "change") {
            GoalOverride c;
            c.label = std::string(cur.word("goal label"));
            while (!cur.done()) {
                const auto key = cur.word("a field");
                if (key == "ideal") c.ideal = cur.number("ideal");
                else if (key == "tolerance") c.toleranceLimit = cur.number("tolerance");
                else if (key == "weight") c.weight = cur.number("weight");
                else cur.failAtPrevious("unknown field '" + std::string(key) + "'");
            }
            current->verdict.changes.push_back(std::move(c));
        } else if (keyword == "snapshot") {
            current->goalsSnapshot.push_back(read_goal(cur));
        } else if (keyword == "linearization") {
            LinearizedMembership lin;
            lin.id = read_id(cur);
            cur.expect("unique");
            lin.pointNotUnique = !read_flag(cur);
            cur.expect("constant");
            lin.affine.constant = cur.number("constant");
            cur.expect("coefficients");
            lin.affine.coeffs = cur.numbers(state.problem.numVars(), "coefficients");
            cur.expect("point");
            lin.expansionPoint = cur.numbers(state.problem.numVars(), "point");
            current->linearizations.push_back(std::move(lin));
        } else if (keyword == "failed") {
            current->failed = true;
            current->failure = cur.rest();
        } else if (keyword == "xF") {
            current->xF = read_rest_numbers(cur, "xF");
        } else if (keyword == "xS") {
            current->xS = read_rest_numbers(cur, "xS");
        } else if (keyword == "lambda") {
            current->lambdaUpper = cur.number("upper lambda");
            current->lambdaFull = cur.number("full lambda");
        } else if (keyword == "memberships") {
            current->memberships = read_rest_numbers(cur, "memberships");
        } else if (keyword == "objectives") {
            current->objectiveValues = read_rest_numbers(cur, "objectives");
        } else {
            cur.failAtPrevious("unknown keyword '" + std::string(keyword) + "'");
        }
        cur.finish();
    }
    if (!header) throw ParseError(1, 1, "empty session document");
    if (inProblem) throw ParseError(lines.back().number, 1, "problem block not closed");
    if (current) throw ParseError(lines.back().number, 1, "iteration not closed");
    if (!haveProblem) throw ParseError(1, 1, "session document has no problem");
    return state;
}

}  // namespace dblfgp
