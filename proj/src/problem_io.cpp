#include "dblfgp/problem_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "text_lines.hpp"

namespace dblfgp {

namespace detail {
extern const char* const kBundledExample1;
}

namespace {

using detail::Line;
using detail::TokenCursor;

const char* relation_symbol(Relation r) {
    switch (r) {
        case Relation::LE: return "<=";
        case Relation::EQ: return "=";
        case Relation::GE: return ">=";
    }
    return "?";
}

std::vector<double> coefficient_list(TokenCursor& cur, std::size_t n, const char* what) {
    auto values = cur.numbers(n, what);
    if (!cur.done() && parse_number(cur.peek())) {
        cur.fail(std::string(what) + ": too many coefficients, expected " + std::to_string(n));
    }
    return values;
}

class ProblemReader {
public:
    ProblemDocument read(std::string_view text) {
        const auto lines = detail::split_lines(text);
        for (const auto& line : lines) {
            TokenCursor cur(line);
            const auto keyword = cur.word("a keyword");
            if (keyword == "problem") {
                doc_.problem.name = std::string(cur.word("a problem name"));
            } else if (keyword == "variables") {
                readVariables(cur);
            } else if (keyword == "dm") {
                closeLevel();
                readLevel(cur, line.number);
            } else if (keyword == "objective") {
                readObjective(cur);
            } else if (keyword == "constraint") {
                readConstraint(cur);
            } else if (keyword == "goal") {
                readGoal(cur);
            } else if (keyword == "compare") {
                readComparison(cur, line.number);
            } else {
                cur.failAtPrevious("unknown keyword '" + std::string(keyword) + "'");
            }
            cur.finish();
        }
        closeLevel();
        finishDocument(lines.empty() ? 1 : lines.back().number);
        return std::move(doc_);
    }

private:
    void requireVariables(TokenCursor& cur) {
        if (doc_.problem.varNames.empty()) cur.failAtPrevious("'variables' must come first");
    }

    void readVariables(TokenCursor& cur) {
        if (!doc_.problem.varNames.empty()) cur.failAtPrevious("variables declared twice");
        while (!cur.done()) {
            const std::string name(cur.word("a variable name"));
            if (varIndex_.count(name)) cur.failAtPrevious("duplicate variable '" + name + "'");
            varIndex_[name] = doc_.problem.varNames.size();
            doc_.problem.varNames.push_back(name);
        }
        if (doc_.problem.varNames.empty()) cur.fail("expected at least one variable name");
    }

    void readLevel(TokenCursor& cur, int lineNumber) {
        requireVariables(cur);
        DecisionLevel level;
        level.level = static_cast<int>(cur.integer("a level number"));
        if (level.level != 1 && level.level != 2) cur.failAtPrevious("level must be 1 or 2");
        level.dmIndex = static_cast<int>(cur.integer("a decision-maker index"));
        if (!dmKeys_.insert({level.level, level.dmIndex}).second) {
            cur.failAtPrevious("decision maker declared twice");
        }
        cur.expect("controls");
        while (!cur.done()) {
            const std::string name(cur.word("a variable name"));
            auto it = varIndex_.find(name);
            if (it == varIndex_.end()) cur.failAtPrevious("unknown variable '" + name + "'");
            if (!controlled_.insert(it->second).second) {
                cur.failAtPrevious("duplicate controlled variable '" + name + "'");
            }
            level.controlledVars.push_back(it->second);
        }
        doc_.problem.levels.push_back(std::move(level));
        openLevelLine_ = lineNumber;
    }

    void closeLevel() {
        if (openLevelLine_ == 0) return;
        if (doc_.problem.levels.back().objectives.empty()) {
            throw ParseError(openLevelLine_, 1, "level requires at least one objective");
        }
        openLevelLine_ = 0;
    }

    void readObjective(TokenCursor& cur) {
        if (openLevelLine_ == 0) cur.failAtPrevious("objective outside a 'dm' block");
        const std::size_t n = doc_.problem.numVars();
        Objective obj;
        obj.label = std::string(cur.word("an objective label"));
        if (!objectiveLabels_.insert(obj.label).second) {
            cur.failAtPrevious("duplicate objective label '" + obj.label + "'");
        }
        const auto sense = cur.word("'min' or 'max'");
        if (sense == "min") obj.sense = Sense::Min;
        else if (sense == "max") obj.sense = Sense::Max;
        else cur.failAtPrevious("expected 'min' or 'max'");
        cur.expect("numerator");
        obj.f.numerator.coeffs = coefficient_list(cur, n, "numerator");
        cur.expect("constant");
        obj.f.numerator.constant = cur.number("numerator constant");
        cur.expect("denominator");
        obj.f.denominator.coeffs = coefficient_list(cur, n, "denominator");
        cur.expect("constant");
        obj.f.denominator.constant = cur.number("denominator constant");
        doc_.problem.levels.back().objectives.push_back(std::move(obj));
    }

    void readConstraint(TokenCursor& cur) {
        requireVariables(cur);
        LinearConstraint c;
        c.label = std::string(cur.word("a constraint label"));
        c.coeffs = coefficient_list(cur, doc_.problem.numVars(), "constraint");
        const auto rel = cur.word("a relation");
        if (rel == "<=") c.relation = Relation::LE;
        else if (rel == "=") c.relation = Relation::EQ;
        else if (rel == ">=") c.relation = Relation::GE;
        else cur.failAtPrevious("expected '<=', '=' or '>=', found '" + std::string(rel) + "'");
        c.rhs = cur.number("right-hand side");
        doc_.problem.constraints.push_back(std::move(c));
    }

    void readGoal(TokenCursor& cur) {
        GoalOverride g;
        g.label = std::string(cur.word("an objective label"));
        if (!objectiveLabels_.count(g.label)) cur.failAtPrevious("unknown objective '" + g.label + "'");
        if (std::any_of(doc_.goals.begin(), doc_.goals.end(),
                        [&](const GoalOverride& o) { return o.label == g.label; })) {
            cur.failAtPrevious("goal for '" + g.label + "' given twice");
        }
        while (!cur.done()) {
            const auto key = cur.word("a goal field");
            if (key == "ideal") g.ideal = cur.number("ideal value");
            else if (key == "tolerance") g.toleranceLimit = cur.number("tolerance limit");
            else if (key == "weight") g.weight = cur.number("weight");
            else cur.failAtPrevious("unknown goal field '" + std::string(key) + "'");
        }
        doc_.goals.push_back(std::move(g));
    }

    void readComparison(TokenCursor& cur, int lineNumber) {
        requireVariables(cur);
        ComparisonRow row;
        row.label = std::string(cur.word("a comparison label"));
        cur.expect("x");
        row.x = coefficient_list(cur, doc_.problem.numVars(), "comparison point");
        cur.expect("membership");
        while (!cur.done()) row.memberships.push_back(cur.number("membership value"));
        comparisonLines_.push_back(lineNumber);
        doc_.comparisons.push_back(std::move(row));
    }

    void finishDocument(int lastLine) {
        auto& p = doc_.problem;
        if (p.varNames.empty()) throw ParseError(1, 1, "document declares no variables");
        int leaders = 0;
        int followers = 0;
        for (const auto& l : p.levels) (l.level == 1 ? leaders : followers)++;
        if (leaders != 1) {
            throw ParseError(lastLine, 1, "expected exactly one level-1 decision maker");
        }
        if (followers < 1) throw ParseError(lastLine, 1, "expected at least one level-2 decision maker");
        for (std::size_t v = 0; v < p.numVars(); ++v) {
            if (!controlled_.count(v)) {
                throw ParseError(lastLine, 1,
                                 "variable '" + p.varNames[v] + "' has no controlling decision maker");
            }
        }
        const std::size_t numObjectives = objectiveLabels_.size();
        for (std::size_t i = 0; i < doc_.comparisons.size(); ++i) {
            if (doc_.comparisons[i].memberships.size() != numObjectives) {
                throw ParseError(comparisonLines_[i], 1,
                                 "comparison row needs " + std::to_string(numObjectives) +
                                     " membership values");
            }
        }
        check_structure(p);
    }

    ProblemDocument doc_;
    std::map<std::string, std::size_t> varIndex_;
    std::set<std::size_t> controlled_;
    std::set<std::pair<int, int>> dmKeys_;
    std::set<std::string> objectiveLabels_;
    std::vector<int> comparisonLines_;
    int openLevelLine_ = 0;
};

void write_numbers(std::ostream& os, const std::vector<double>& values) {
    for (double v : values) os << ' ' << format_number(v);
}

}  // namespace

ProblemDocument parse_problem(std::string_view text) { return ProblemReader{}.read(text); }

std::string serialize_problem(const ProblemDocument& doc) {
    const auto& p = doc.problem;
    std::ostringstream os;
    if (!p.name.empty()) os << "problem " << p.name << '\n';
    os << "variables";
    for (const auto& v : p.varNames) os << ' ' << v;
    os << '\n';
    for (const auto& level : p.levels) {
        os << "dm " << level.level << ' ' << level.dmIndex << " controls";
        for (std::size_t v : level.controlledVars) os << ' ' << p.varNames[v];
        os << '\n';
        for (const auto& obj : level.objectives) {
            os << "objective " << obj.label << (obj.sense == Sense::Min ? " min" : " max")
               << " numerator";
            write_numbers(os, obj.f.numerator.coeffs);
            os << " constant " << format_number(obj.f.numerator.constant) << " denominator";
            write_numbers(os, obj.f.denominator.coeffs);
            os << " constant " << format_number(obj.f.denominator.constant) << '\n';
        }
    }
    for (const auto& c : p.constraints) {
        os << "constraint " << c.label;
        write_numbers(os, c.coeffs);
        os << ' ' << relation_symbol(c.relation) << ' ' << format_number(c.rhs) << '\n';
    }
    for (const auto& g : doc.goals) {
        os << "goal " << g.label;
        if (g.ideal) os << " ideal " << format_number(*g.ideal);
        if (g.toleranceLimit) os << " tolerance " << format_number(*g.toleranceLimit);
        if (g.weight) os << " weight " << format_number(*g.weight);
        os << '\n';
    }
    for (const auto& row : doc.comparisons) {
        os << "compare " << row.label << " x";
        write_numbers(os, row.x);
        os << " membership";
        write_numbers(os, row.memberships);
        os << '\n';
    }
    return os.str();
}

std::optional<std::string_view> bundled_problem(std::string_view name) {
    if (name == "example1") return std::string_view(detail::kBundledExample1);
    return std::nullopt;
}

std::string load_problem_text(const std::string& nameOrPath) {
    if (auto text = bundled_problem(nameOrPath)) return std::string(*text);
    std::ifstream in(nameOrPath, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open problem file '" + nameOrPath + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace dblfgp
