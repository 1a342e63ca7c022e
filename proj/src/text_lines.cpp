#include "text_lines.hpp"

#include <charconv>
#include <cmath>

namespace dblfgp {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

std::string format_number(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) return std::to_string(value);
    return {buf, end};
}

std::optional<double> parse_number(std::string_view token) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double v = 0.0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || end != token.data() + token.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

namespace detail {

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        const auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        Line line{number, raw, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == ' ' || raw[i] == '\t') {
                ++i;
                continue;
            }
            if (raw[i] == '#') break;
            const std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
            line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
        if (text.empty()) break;
    }
    return out;
}

std::string_view TokenCursor::peek() const {
    return done() ? std::string_view{} : line_.tokens[pos_].text;
}

int TokenCursor::columnHere() const {
    if (!done()) return line_.tokens[pos_].column;
    return static_cast<int>(line_.raw.size()) + 1;
}

void TokenCursor::fail(const std::string& message) const {
    throw ParseError(line_.number, columnHere(), message);
}

void TokenCursor::failAtPrevious(const std::string& message) const {
    const int column = pos_ == 0 ? 1 : line_.tokens[pos_ - 1].column;
    throw ParseError(line_.number, column, message);
}

std::string_view TokenCursor::word(const char* what) {
    if (done()) fail(std::string("expected ") + what);
    return line_.tokens[pos_++].text;
}

void TokenCursor::expect(std::string_view keyword) {
    if (done() || peek() != keyword) {
        fail("expected '" + std::string(keyword) + "'" +
             (done() ? std::string(" at end of line") : ", found '" + std::string(peek()) + "'"));
    }
    ++pos_;
}

double TokenCursor::number(const char* what) {
    if (done()) fail(std::string("expected ") + what);
    auto v = parse_number(peek());
    if (!v) fail(std::string("expected ") + what + ", found '" + std::string(peek()) + "'");
    ++pos_;
    return *v;
}

long TokenCursor::integer(const char* what) {
    if (done()) fail(std::string("expected ") + what);
    long v = 0;
    const auto tok = peek();
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || end != tok.data() + tok.size()) {
        fail(std::string("expected ") + what + ", found '" + std::string(tok) + "'");
    }
    ++pos_;
    return v;
}

std::vector<double> TokenCursor::numbers(std::size_t count, const char* what) {
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (done() || !parse_number(peek())) {
            fail(std::string(what) + ": expected " + std::to_string(count) + " numbers, found " +
                 std::to_string(i));
        }
        out.push_back(number(what));
    }
    return out;
}

std::string TokenCursor::rest() {
    if (done()) return {};
    const auto start = static_cast<std::size_t>(line_.tokens[pos_].column - 1);
    pos_ = line_.tokens.size();
    std::string_view tail = line_.raw.substr(start);
    while (!tail.empty() && (tail.back() == ' ' || tail.back() == '\t')) tail.remove_suffix(1);
    return std::string(tail);
}

void TokenCursor::finish() {
    if (!done()) fail("unexpected token '" + std::string(peek()) + "'");
}

}  // namespace detail
}  // namespace dblfgp
