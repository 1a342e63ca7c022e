#pragma once

// HTTP facade over interactive sessions.
//
//   POST /sessions                    body: problem document text, or
//                                     {"problem": "<text>"} / {"fixture": "example1"}
//   GET  /sessions                    list of session summaries
//   GET  /sessions/{id}               summary with current goals
//   GET  /sessions/{id}/payoff
//   POST /sessions/{id}/solve         compute the next candidate
//   POST /sessions/{id}/verdict       {"verdict": "accept"} or
//                                     {"verdict": "revise", "changes": [{"goal": "f11",
//                                       "tolerance": "0.3", "weight": "1"}]}
//   GET  /sessions/{id}/report?format=json|text|csv
//
// Numbers travel as decimal strings. Errors are {code, message, details}.
// Mutations on a session that is busy with another request fail with 409.

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dblfgp/session.hpp"

namespace httplib {
class Server;
}

namespace dblfgp {

struct ServiceResponse {
    int status = 200;
    nlohmann::json body;
    /// Set for non-JSON report formats.
    std::optional<std::string> text;
    std::string contentType = "application/json";
};

class SessionStore {
public:
    struct Entry {
        std::mutex mutex;
        SessionState state;
    };

    explicit SessionStore(std::optional<std::filesystem::path> stateDir = std::nullopt);

    std::string add(SessionState state);
    std::shared_ptr<Entry> find(const std::string& id) const;
    std::vector<std::string> ids() const;
    /// Writes the session document; the caller holds the entry's mutex.
    void persist(const std::string& id, const SessionState& state) const;

private:
    void loadExisting();

    std::optional<std::filesystem::path> stateDir_;
    mutable std::mutex mapMutex_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
    unsigned long next_ = 1;
};

/// Request handling, independent of the transport so it can be tested
/// directly.
class SessionService {
public:
    explicit SessionService(std::optional<std::filesystem::path> stateDir = std::nullopt);

    ServiceResponse createSession(const std::string& body);
    ServiceResponse listSessions() const;
    ServiceResponse getSession(const std::string& id) const;
    ServiceResponse getPayoff(const std::string& id) const;
    ServiceResponse solve(const std::string& id);
    ServiceResponse verdict(const std::string& id, const std::string& body);
    ServiceResponse getReport(const std::string& id, const std::string& format) const;

    /// Registers every endpoint on `server`.
    void mount(httplib::Server& server);

private:
    SessionStore store_;
};

/// Blocks serving on host:port until the process is stopped.
int run_server(const std::string& host, int port, std::optional<std::filesystem::path> stateDir);

}  // namespace dblfgp
