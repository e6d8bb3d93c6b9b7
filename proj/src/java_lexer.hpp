// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oasforge::java {

struct Token {
    enum class Kind : std::uint8_t { identifier, integer, floating, string, character, punct, eof };

    Kind kind = Kind::eof;
    /// Identifier/punctuation spelling, literal digits, or the unescaped
    /// contents of string and char literals.
    std::string text;
    int line = 0;

    bool is(std::string_view p) const noexcept
    {
        return (kind == Kind::punct || kind == Kind::identifier) && text == p;
    }
    bool is_ident() const noexcept { return kind == Kind::identifier; }
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& message, int line)
        : std::runtime_error(message), line_(line)
    {
    }
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Splits Java source into tokens, dropping whitespace and comments. The
/// result always ends with an eof token.
std::vector<Token> tokenize(std::string_view source);

/// Appends the UTF-8 encoding of `cp` to `out`.
void append_utf8(std::string& out, char32_t cp);

} // namespace oasforge::java
