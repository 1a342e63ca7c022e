#include "dblfgp/service.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <httplib.h>

#include "dblfgp/problem_io.hpp"
#include "dblfgp/report_io.hpp"
#include "dblfgp/session_io.hpp"

namespace dblfgp {

using nlohmann::json;

namespace {

constexpr const char* kSessionSuffix = ".session";

ServiceResponse error(int status, const std::string& code, const std::string& message,
                      json details = json::object()) {
    return {status, {{"code", code}, {"message", message}, {"details", std::move(details)}}, {}, "application/json"};
}

ServiceResponse not_found(const std::string& id) {
    return error(404, "not-found", "no session '" + id + "'");
}

ServiceResponse busy() {
    return error(409, "conflict", "session is being modified by another request");
}

json summary(const std::string& id, const SessionState& state) {
    const std::string base = "/sessions/" + id;
    return {{"id", id},
            {"problem", state.problem.name},
            {"status", to_string(state.status)},
            {"iterations", state.history.size()},
            {"goals", to_json(state.goals)},
            {"warnings", state.warnings},
            {"links",
             {{"self", base},
              {"payoff", base + "/payoff"},
              {"solve", base + "/solve"},
              {"verdict", base + "/verdict"},
              {"report", base + "/report"}}}};
}

std::optional<double> json_number(const json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_number(v.get<std::string>());
    return std::nullopt;
}

}  // namespace

SessionStore::SessionStore(std::optional<std::filesystem::path> stateDir)
    : stateDir_(std::move(stateDir)) {
    if (stateDir_) {
        std::filesystem::create_directories(*stateDir_);
        loadExisting();
    }
}

void SessionStore::loadExisting() {
    for (const auto& file : std::filesystem::directory_iterator(*stateDir_)) {
        if (file.path().extension() != kSessionSuffix) continue;
        std::ifstream in(file.path(), std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            auto entry = std::make_shared<Entry>();
            entry->state = parse_session(buf.str());
            const std::string id = file.path().stem().string();
            sessions_[id] = std::move(entry);
            if (id.size() > 1 && id[0] == 's') {
                try {
                    next_ = std::max(next_, std::stoul(id.substr(1)) + 1);
                } catch (const std::exception&) {
                }
            }
        } catch (const std::exception& err) {
            std::cerr << "skipping unreadable session " << file.path() << ": " << err.what() << '\n';
        }
    }
}

std::string SessionStore::add(SessionState state) {
    auto entry = std::make_shared<Entry>();
    entry->state = std::move(state);
    std::string id;
    {
        std::lock_guard lock(mapMutex_);
        char buf[32];
        std::snprintf(buf, sizeof buf, "s%04lu", next_++);
        id = buf;
        sessions_[id] = entry;
    }
    std::lock_guard lock(entry->mutex);
    persist(id, entry->state);
    return id;
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) const {
    std::lock_guard lock(mapMutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

std::vector<std::string> SessionStore::ids() const {
    std::lock_guard lock(mapMutex_);
    std::vector<std::string> out;
    for (const auto& [id, entry] : sessions_) out.push_back(id);
    return out;
}

void SessionStore::persist(const std::string& id, const SessionState& state) const {
    if (!stateDir_) return;
    const auto target = *stateDir_ / (id + kSessionSuffix);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << serialize_session(state);
    }
    std::filesystem::rename(tmp, target);
}

SessionService::SessionService(std::optional<std::filesystem::path> stateDir)
    : store_(std::move(stateDir)) {}

ServiceResponse SessionService::createSession(const std::string& body) {
    std::string text = body;
    const json parsed = json::parse(body, nullptr, false);
    if (!parsed.is_discarded() && parsed.is_object()) {
        if (parsed.contains("problem") && parsed["problem"].is_string()) {
            text = parsed["problem"].get<std::string>();
        } else if (parsed.contains("fixture") && parsed["fixture"].is_string()) {
            auto fixture = bundled_problem(parsed["fixture"].get<std::string>());
            if (!fixture) return error(422, "invalid-problem", "unknown fixture");
            text = std::string(*fixture);
        } else {
            return error(422, "invalid-problem", "expected a 'problem' or 'fixture' field");
        }
    }
    try {
        ProblemDocument doc = parse_problem(text);
        SessionState state = start_session(std::move(doc.problem), doc.goals, std::move(doc.comparisons));
        const std::string id = store_.add(std::move(state));
        auto entry = store_.find(id);
        std::lock_guard lock(entry->mutex);
        return {201, summary(id, entry->state), {}, "application/json"};
    } catch (const ParseError& err) {
        return error(422, "invalid-problem", err.what(),
                     {{"line", err.line()}, {"column", err.column()}});
    } catch (const ValidationFailed& err) {
        return error(422, "invalid-problem", err.what(), to_json(err.report()));
    } catch (const std::exception& err) {
        return error(422, "invalid-problem", err.what());
    }
}

ServiceResponse SessionService::listSessions() const {
    json list = json::array();
    for (const auto& id : store_.ids()) {
        auto entry = store_.find(id);
        std::lock_guard lock(entry->mutex);
        list.push_back({{"id", id},
                        {"problem", entry->state.problem.name},
                        {"status", to_string(entry->state.status)},
                        {"iterations", entry->state.history.size()}});
    }
    return {200, {{"sessions", list}}, {}, "application/json"};
}

ServiceResponse SessionService::getSession(const std::string& id) const {
    auto entry = store_.find(id);
    if (!entry) return not_found(id);
    std::lock_guard lock(entry->mutex);
    json body = summary(id, entry->state);
    body["history"] = json::array();
    for (const auto& it : entry->state.history) body["history"].push_back(to_json(it, entry->state));
    return {200, body, {}, "application/json"};
}

ServiceResponse SessionService::getPayoff(const std::string& id) const {
    auto entry = store_.find(id);
    if (!entry) return not_found(id);
    std::lock_guard lock(entry->mutex);
    return {200, {{"id", id}, {"payoff", to_json(entry->state.payoff)}}, {}, "application/json"};
}

ServiceResponse SessionService::solve(const std::string& id) {
    auto entry = store_.find(id);
    if (!entry) return not_found(id);
    std::unique_lock lock(entry->mutex, std::try_to_lock);
    if (!lock.owns_lock()) return busy();
    try {
        const Iteration& it = compute_candidate(entry->state);
        store_.persist(id, entry->state);
        json body = to_json(it, entry->state);
        body["status"] = to_string(entry->state.status);
        return {200, body, {}, "application/json"};
    } catch (const InvalidTransition& err) {
        return error(409, "conflict", err.what(), {{"status", to_string(entry->state.status)}});
    }
}

ServiceResponse SessionService::verdict(const std::string& id, const std::string& body) {
    auto entry = store_.find(id);
    if (!entry) return not_found(id);
    const json parsed = json::parse(body, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object() || !parsed.contains("verdict") ||
        !parsed["verdict"].is_string()) {
        return error(422, "invalid-verdict", "expected {\"verdict\": \"accept\" | \"revise\"}");
    }
    Verdict v;
    const auto kind = parsed["verdict"].get<std::string>();
    if (kind == "accept") {
        v = Verdict::accept();
    } else if (kind == "revise") {
        std::vector<GoalOverride> changes;
        if (parsed.contains("changes") && !parsed["changes"].is_array()) {
            return error(422, "invalid-verdict", "'changes' must be an array");
        }
        for (const auto& c : parsed.value("changes", json::array())) {
            if (!c.is_object() || !c.contains("goal") || !c["goal"].is_string()) {
                return error(422, "invalid-verdict", "each change needs a 'goal' label");
            }
            GoalOverride edit;
            edit.label = c["goal"].get<std::string>();
            for (const char* field : {"ideal", "tolerance", "weight"}) {
                if (!c.contains(field)) continue;
                auto value = json_number(c[field]);
                if (!value) {
                    return error(422, "invalid-verdict",
                                 std::string("field '") + field + "' is not a number");
                }
                if (std::string(field) == "ideal") edit.ideal = value;
                else if (std::string(field) == "tolerance") edit.toleranceLimit = value;
                else edit.weight = value;
            }
            changes.push_back(std::move(edit));
        }
        v = Verdict::revise(std::move(changes));
    } else {
        return error(422, "invalid-verdict", "unknown verdict '" + kind + "'");
    }

    std::unique_lock lock(entry->mutex, std::try_to_lock);
    if (!lock.owns_lock()) return busy();
    try {
        submit_verdict(entry->state, v);
    } catch (const InvalidTransition& err) {
        return error(409, "conflict", err.what(), {{"status", to_string(entry->state.status)}});
    } catch (const InvalidRevision& err) {
        return error(422, "invalid-revision", err.what());
    }
    store_.persist(id, entry->state);
    return {200, summary(id, entry->state), {}, "application/json"};
}

ServiceResponse SessionService::getReport(const std::string& id, const std::string& format) const {
    auto entry = store_.find(id);
    if (!entry) return not_found(id);
    const auto fmt = parse_report_format(format.empty() ? "json" : format);
    if (!fmt) return error(422, "invalid-format", "format must be json, text or csv");
    std::lock_guard lock(entry->mutex);
    if (entry->state.history.empty()) return error(409, "no-iterations", "no iterations");
    const SolutionReport rep = report(entry->state);
    if (*fmt == ReportFormat::Json) return {200, to_json(rep), {}, "application/json"};
    return {200, json(), render_report(rep, *fmt), *fmt == ReportFormat::Csv ? "text/csv" : "text/plain"};
}

void SessionService::mount(httplib::Server& server) {
    auto send = [](httplib::Response& res, const ServiceResponse& r) {
        res.status = r.status;
        if (r.text) res.set_content(*r.text, r.contentType);
        else res.set_content(r.body.dump(), "application/json");
    };
    server.Post("/sessions", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, createSession(req.body));
    });
    server.Get("/sessions", [this, send](const httplib::Request&, httplib::Response& res) {
        send(res, listSessions());
    });
    server.Get(R"(/sessions/([^/]+))", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, getSession(req.matches[1]));
    });
    server.Get(R"(/sessions/([^/]+)/payoff)",
               [this, send](const httplib::Request& req, httplib::Response& res) {
                   send(res, getPayoff(req.matches[1]));
               });
    server.Post(R"(/sessions/([^/]+)/solve)",
                [this, send](const httplib::Request& req, httplib::Response& res) {
                    send(res, solve(req.matches[1]));
                });
    server.Post(R"(/sessions/([^/]+)/verdict)",
                [this, send](const httplib::Request& req, httplib::Response& res) {
                    send(res, verdict(req.matches[1], req.body));
                });
    server.Get(R"(/sessions/([^/]+)/report)",
               [this, send](const httplib::Request& req, httplib::Response& res) {
                   send(res, getReport(req.matches[1], req.get_param_value("format")));
               });
    server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string message = "internal error";
        try {
            std::rethrow_exception(ep);
        } catch (const std::exception& e) {
            message = e.what();
        } catch (...) {
        }
        res.status = 500;
        res.set_content(json{{"code", "internal"}, {"message", message}, {"details", json::object()}}.dump(),
                        "application/json");
    });
}

int run_server(const std::string& host, int port, std::optional<std::filesystem::path> stateDir) {
    SessionService service(std::move(stateDir));
    httplib::Server server;
    service.mount(server);
    std::cerr << "listening on " << host << ':' << port << '\n';
    if (!server.listen(host, port)) {
        std::cerr << "cannot listen on " << host << ':' << port << '\n';
        return 2;
    }
    return 0;
}

}  // namespace dblfgp
