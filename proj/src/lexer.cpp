#include "smartgraph/lexer.hpp"

#include <algorithm>
#include <array>

namespace smartgraph {

namespace {

enum class StripState { Code, LineComment, BlockComment, String };

constexpr std::array<std::string_view, 27> kMultiCharPuncts = {
    ">>>=", "<<=", ">>=", ">>>", "**", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=",
    "-=",   "*=",  "/=",  "%=",  "|=", "&=", "^=", "=>", "<<", ">>", "->", ":=", "..",
};

constexpr std::string_view kSingleCharPuncts = "(){}[];,.=+-*/%<>!&|^~?:@#";

bool is_ident_start(char c)
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$';
}

bool is_ident_char(char c)
{
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(char c)
{
    return c >= '0' && c <= '9';
}

bool is_space(char c)
{
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

StrippedSource strip_noise_detailed(std::string_view source)
{
    StrippedSource out;
    out.text.assign(source);
    std::string& text = out.text;

    StripState state = StripState::Code;
    char quote = '\0';
    int line = 1;
    int string_start_line = 0;
    int comment_start_line = 0;

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        const char next = i + 1 < text.size() ? text[i + 1] : '\0';
        switch (state) {
        case StripState::Code:
            if (c == '/' && next == '/') {
                text[i] = ' ';
                text[i + 1] = ' ';
                ++i;
                state = StripState::LineComment;
            } else if (c == '/' && next == '*') {
                text[i] = ' ';
                text[i + 1] = ' ';
                ++i;
                comment_start_line = line;
                state = StripState::BlockComment;
            } else if (c == '"' || c == '\'') {
                quote = c;
                string_start_line = line;
                state = StripState::String;
            }
            break;
        case StripState::LineComment:
            if (c == '\n') {
                state = StripState::Code;
            } else if (c != '\r') {
                text[i] = ' ';
            }
            break;
        case StripState::BlockComment:
            if (c == '*' && next == '/') {
                text[i] = ' ';
                text[i + 1] = ' ';
                ++i;
                state = StripState::Code;
            } else if (c != '\n' && c != '\r') {
                text[i] = ' ';
            }
            break;
        case StripState::String:
            if (c == quote) {
                state = StripState::Code;
            } else if (c == '\n') {
                // Raw newlines cannot appear in Solidity literals; close the string here.
                if (out.unterminated_string_line == 0) {
                    out.unterminated_string_line = string_start_line;
                }
                state = StripState::Code;
            } else if (c == '\\' && next != '\0' && next != '\n') {
                text[i] = kStringPlaceholder;
                text[i + 1] = kStringPlaceholder;
                ++i;
            } else if (c != '\r') {
                text[i] = kStringPlaceholder;
            }
            break;
        }
        if (text[i] == '\n') {
            ++line;
        }
    }

    if (state == StripState::BlockComment) {
        out.unterminated_comment_line = comment_start_line;
    } else if (state == StripState::String && out.unterminated_string_line == 0) {
        out.unterminated_string_line = string_start_line;
    }
    return out;
}

std::string strip_noise(std::string_view source)
{
    return strip_noise_detailed(source).text;
}

std::vector<Token> tokenize(std::string_view stripped)
{
    std::vector<Token> tokens;
    int line = 1;
    std::size_t i = 0;
    const std::size_t n = stripped.size();

    auto push = [&](TokenKind kind, std::size_t start, std::size_t length) {
        tokens.push_back(Token{kind, std::string(stripped.substr(start, length)), line, start, length});
    };

    while (i < n) {
        const char c = stripped[i];
        if (c == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (is_space(c)) {
            ++i;
            continue;
        }
        if (is_ident_start(c)) {
            std::size_t j = i + 1;
            while (j < n && is_ident_char(stripped[j])) {
                ++j;
            }
            push(TokenKind::Identifier, i, j - i);
            i = j;
            continue;
        }
        if (is_digit(c)) {
            std::size_t j = i + 1;
            while (j < n && (is_ident_char(stripped[j]) ||
                             (stripped[j] == '.' && j + 1 < n && is_digit(stripped[j + 1])))) {
                ++j;
            }
            push(TokenKind::Number, i, j - i);
            i = j;
            continue;
        }
        if (c == '"' || c == '\'') {
            std::size_t j = i + 1;
            while (j < n && stripped[j] != c && stripped[j] != '\n') {
                ++j;
            }
            if (j < n && stripped[j] == c) {
                ++j;
            }
            push(TokenKind::String, i, j - i);
            i = j;
            continue;
        }
        const std::string_view rest = stripped.substr(i);
        const auto multi = std::find_if(kMultiCharPuncts.begin(), kMultiCharPuncts.end(),
                                        [&](std::string_view p) { return rest.starts_with(p); });
        if (multi != kMultiCharPuncts.end()) {
            push(TokenKind::Punct, i, multi->size());
            i += multi->size();
            continue;
        }
        if (kSingleCharPuncts.find(c) != std::string_view::npos) {
            push(TokenKind::Punct, i, 1);
            ++i;
            continue;
        }
        // One token per character, so a multi-byte UTF-8 sequence stays whole.
        std::size_t j = i + 1;
        if (static_cast<unsigned char>(c) >= 0xc0) {
            while (j < n && (static_cast<unsigned char>(stripped[j]) & 0xc0) == 0x80) {
                ++j;
            }
        }
        push(TokenKind::Unknown, i, j - i);
        i = j;
    }
    return tokens;
}

std::size_t count_lines(std::string_view text)
{
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
}

}  // namespace smartgraph
