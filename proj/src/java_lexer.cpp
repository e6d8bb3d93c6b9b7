// SPDX-License-Identifier: Apache-2.0
#include "java_lexer.hpp"

#include <cctype>

namespace oasforge::java {

void append_utf8(std::string& out, char32_t cp)
{
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

namespace {

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80; }
bool ident_part(unsigned char c) { return ident_start(c) || std::isdigit(c); }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        out.reserve(src_.size() / 4);
        while (true) {
            skip_trivia();
            if (pos_ >= src_.size())
                break;
            out.push_back(next());
        }
        out.push_back({Token::Kind::eof, "", line_});
        return out;
    }

private:
    char peek(std::size_t ahead = 0) const
    {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    char advance()
    {
        char c = src_[pos_++];
        if (c == '\n')
            ++line_;
        return c;
    }

    void skip_trivia()
    {
        while (pos_ < src_.size()) {
            char c = peek();
            if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && peek() != '\n')
                    ++pos_;
            } else if (c == '/' && peek(1) == '*') {
                int start = line_;
                pos_ += 2;
                while (pos_ < src_.size() && !(peek() == '*' && peek(1) == '/'))
                    advance();
                if (pos_ >= src_.size())
                    throw SyntaxError("unterminated comment", start);
                pos_ += 2;
            } else if (std::isspace(static_cast<unsigned char>(c)) || c == '\f') {
                advance();
            } else if (static_cast<unsigned char>(c) == 0xEF && peek(1) == '\xBB' && peek(2) == '\xBF') {
                pos_ += 3;
            } else {
                break;
            }
        }
    }

    Token next()
    {
        int line = line_;
        auto c = static_cast<unsigned char>(peek());
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && ident_part(static_cast<unsigned char>(peek())))
                ++pos_;
            return {Token::Kind::identifier, std::string(src_.substr(start, pos_ - start)), line};
        }
        if (std::isdigit(c) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))))
            return number(line);
        if (c == '"') {
            if (peek(1) == '"' && peek(2) == '"')
                return text_block(line);
            return quoted('"', Token::Kind::string, line);
        }
        if (c == '\'')
            return quoted('\'', Token::Kind::character, line);
        if (c == '.' && peek(1) == '.' && peek(2) == '.') {
            pos_ += 3;
            return {Token::Kind::punct, "...", line};
        }
        if (c == ':' && peek(1) == ':') {
            pos_ += 2;
            return {Token::Kind::punct, "::", line};
        }
        if (c == '-' && peek(1) == '>') {
            pos_ += 2;
            return {Token::Kind::punct, "->", line};
        }
        ++pos_;
        return {Token::Kind::punct, std::string(1, static_cast<char>(c)), line};
    }

    Token number(int line)
    {
        std::size_t start = pos_;
        bool floating = false;
        if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X' || peek(1) == 'b' || peek(1) == 'B')) {
            pos_ += 2;
            while (std::isxdigit(static_cast<unsigned char>(peek())) || peek() == '_')
                ++pos_;
        } else {
            while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')
                ++pos_;
            if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
                floating = true;
                ++pos_;
                while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')
                    ++pos_;
            } else if (peek() == '.' && !ident_start(static_cast<unsigned char>(peek(1))) && peek(1) != '.') {
                floating = true;
                ++pos_;
            }
            if (peek() == 'e' || peek() == 'E') {
                floating = true;
                ++pos_;
                if (peek() == '+' || peek() == '-')
                    ++pos_;
                while (std::isdigit(static_cast<unsigned char>(peek())))
                    ++pos_;
            }
        }
        std::string digits(src_.substr(start, pos_ - start));
        char suffix = peek();
        if (suffix == 'l' || suffix == 'L') {
            ++pos_;
        } else if (suffix == 'f' || suffix == 'F' || suffix == 'd' || suffix == 'D') {
            ++pos_;
            floating = true;
        }
        std::erase(digits, '_');
        return {floating ? Token::Kind::floating : Token::Kind::integer, digits, line};
    }

    char32_t escape(int line)
    {
        if (pos_ >= src_.size())
            throw SyntaxError("unterminated literal", line);
        char e = advance();
        switch (e) {
        case 'n': return '\n';
        case 't': return '\t';
        case 'r': return '\r';
        case 'b': return '\b';
        case 'f': return '\f';
        case 's': return ' ';
        case '0': case '1': case '2': case '3': case '4': case '5': case '6': case '7': {
            char32_t v = static_cast<char32_t>(e - '0');
            for (int i = 0; i < 2 && peek() >= '0' && peek() <= '7'; ++i)
                v = v * 8 + static_cast<char32_t>(advance() - '0');
            return v;
        }
        case 'u': {
            while (peek() == 'u')
                ++pos_;
            char32_t v = 0;
            for (int i = 0; i < 4; ++i) {
                char h = peek();
                if (!std::isxdigit(static_cast<unsigned char>(h)))
                    throw SyntaxError("bad unicode escape", line);
                ++pos_;
                v = v * 16 + static_cast<char32_t>(std::isdigit(static_cast<unsigned char>(h))
                                                       ? h - '0'
                                                       : (std::tolower(h) - 'a' + 10));
            }
            return v;
        }
        default: return static_cast<unsigned char>(e);
        }
    }

    Token quoted(char quote, Token::Kind kind, int line)
    {
        ++pos_;
        std::string value;
        char32_t pending_high = 0;
        while (true) {
            if (pos_ >= src_.size() || peek() == '\n')
                throw SyntaxError("unterminated literal", line);
            char c = advance();
            if (c == quote)
                break;
            if (c != '\\') {
                value += c;
                continue;
            }
            char32_t cp = escape(line);
            if (cp >= 0xD800 && cp <= 0xDBFF) {
                pending_high = cp;
                continue;
            }
            if (pending_high && cp >= 0xDC00 && cp <= 0xDFFF) {
                cp = 0x10000 + ((pending_high - 0xD800) << 10) + (cp - 0xDC00);
                pending_high = 0;
            }
            append_utf8(value, cp);
        }
        return {kind, std::move(value), line};
    }

    // Text blocks keep their raw lines minus the common indentation.
    Token text_block(int line)
    {
        pos_ += 3;
        while (pos_ < src_.size() && peek() != '\n')
            ++pos_;
        if (pos_ >= src_.size())
            throw SyntaxError("unterminated text block", line);
        advance();
        std::string raw;
        while (true) {
            if (pos_ >= src_.size())
                throw SyntaxError("unterminated text block", line);
            if (peek() == '"' && peek(1) == '"' && peek(2) == '"') {
                pos_ += 3;
                break;
            }
            char c = advance();
            if (c == '\\') {
                if (peek() == '\n') {
                    advance();
                    continue;
                }
                append_utf8(raw, escape(line));
                continue;
            }
            raw += c;
        }
        std::vector<std::string> lines;
        std::size_t from = 0;
        for (std::size_t i = 0; i <= raw.size(); ++i) {
            if (i == raw.size() || raw[i] == '\n') {
                lines.emplace_back(raw.substr(from, i - from));
                from = i + 1;
            }
        }
        std::size_t indent = std::string::npos;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const auto& l = lines[i];
            auto first = l.find_first_not_of(" \t");
            if (first == std::string::npos && i + 1 != lines.size())
                continue;
            indent = std::min(indent, first == std::string::npos ? l.size() : first);
        }
        if (indent == std::string::npos)
            indent = 0;
        std::string value;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            std::string l = lines[i].size() >= indent ? lines[i].substr(indent) : std::string();
            auto last = l.find_last_not_of(" \t");
            l.erase(last == std::string::npos ? 0 : last + 1);
            value += l;
            if (i + 1 != lines.size())
                value += '\n';
        }
        return {Token::Kind::string, std::move(value), line};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

} // namespace

std::vector<Token> tokenize(std::string_view source)
{
    return Lexer(source).run();
}

} // namespace oasforge::java
