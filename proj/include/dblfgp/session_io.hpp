#pragma once

#include <string>
#include <string_view>

#include "dblfgp/session.hpp"

namespace dblfgp {

/// One self-contained text document per session, in the same line-oriented
/// style as problem documents. Numbers keep full precision, so
/// parse_session(serialize_session(s)) == s.
std::string serialize_session(const SessionState& state);
SessionState parse_session(std::string_view text);

}  // namespace dblfgp
