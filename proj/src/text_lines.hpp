#pragma once

// Whitespace tokenizer shared by the problem and session readers.

#include <string>
#include <string_view>
#include <vector>

#include "dblfgp/problem_io.hpp"

namespace dblfgp::detail {

struct Token {
    std::string_view text;
    int column = 1;
};

struct Line {
    int number = 0;
    std::string_view raw;
    std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text);

/// Cursor over one line's tokens with located errors.
class TokenCursor {
public:
    explicit TokenCursor(const Line& line) : line_(line) {}

    [[nodiscard]] bool done() const { return pos_ >= line_.tokens.size(); }
    [[nodiscard]] std::string_view peek() const;
    std::string_view word(const char* what);
    void expect(std::string_view keyword);
    double number(const char* what);
    long integer(const char* what);
    std::vector<double> numbers(std::size_t count, const char* what);
    /// Remainder of the raw line after the current token position.
    std::string rest();
    void finish();

    [[noreturn]] void fail(const std::string& message) const;
    [[noreturn]] void failAtPrevious(const std::string& message) const;

private:
    int columnHere() const;

    const Line& line_;
    std::size_t pos_ = 0;
};

}  // namespace dblfgp::detail
