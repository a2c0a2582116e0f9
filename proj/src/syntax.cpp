#include "syntax.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace smartgraph::syntax {

namespace {

char closer_for(std::string_view open)
{
    if (open == "(") {
        return ')';
    }
    if (open == "[") {
        return ']';
    }
    if (open == "{") {
        return '}';
    }
    return '\0';
}

char opener_for(std::string_view close)
{
    if (close == ")") {
        return '(';
    }
    if (close == "]") {
        return '[';
    }
    if (close == "}") {
        return '{';
    }
    return '\0';
}

bool is_word(const Token& token)
{
    return token.kind == TokenKind::Identifier || token.kind == TokenKind::Number;
}

bool all_digits(std::string_view text)
{
    return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Index one past an lvalue chain starting at the identifier tokens[start].
std::size_t chain_end(TokenSpan tokens, std::size_t start)
{
    std::size_t i = start + 1;
    while (i < tokens.size()) {
        if (tokens[i].is(".") && i + 1 < tokens.size() && tokens[i + 1].is_identifier()) {
            i += 2;
        } else if (tokens[i].is("[")) {
            const std::size_t close = match_forward(tokens, i);
            if (close == npos) {
                return tokens.size();
            }
            i = close + 1;
        } else {
            break;
        }
    }
    return i;
}

}  // namespace

std::string to_lower(std::string_view text)
{
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool contains_ci(std::string_view haystack, std::string_view needle)
{
    return to_lower(haystack).find(to_lower(needle)) != std::string::npos;
}

bool is_open_bracket(const Token& token)
{
    return token.kind == TokenKind::Punct && closer_for(token.text) != '\0';
}

bool is_close_bracket(const Token& token)
{
    return token.kind == TokenKind::Punct && opener_for(token.text) != '\0';
}

std::size_t match_forward(TokenSpan tokens, std::size_t open, std::size_t limit)
{
    if (open >= tokens.size()) {
        return npos;
    }
    const char close = closer_for(tokens[open].text);
    if (close == '\0') {
        return npos;
    }
    const std::string_view open_text = tokens[open].text;
    const std::size_t end = std::min(limit, tokens.size());
    int depth = 0;
    for (std::size_t i = open; i < end; ++i) {
        if (tokens[i].kind != TokenKind::Punct) {
            continue;
        }
        if (tokens[i].text == open_text) {
            ++depth;
        } else if (tokens[i].text.size() == 1 && tokens[i].text[0] == close) {
            if (--depth == 0) {
                return i;
            }
        }
    }
    return npos;
}

std::size_t match_backward(TokenSpan tokens, std::size_t close)
{
    if (close >= tokens.size()) {
        return npos;
    }
    const char open = opener_for(tokens[close].text);
    if (open == '\0') {
        return npos;
    }
    const std::string_view close_text = tokens[close].text;
    int depth = 0;
    for (std::size_t i = close + 1; i-- > 0;) {
        if (tokens[i].kind != TokenKind::Punct) {
            continue;
        }
        if (tokens[i].text == close_text) {
            ++depth;
        } else if (tokens[i].text.size() == 1 && tokens[i].text[0] == open) {
            if (--depth == 0) {
                return i;
            }
        }
    }
    return npos;
}

std::string join_tokens(TokenSpan tokens, std::size_t begin, std::size_t end)
{
    std::string out;
    end = std::min(end, tokens.size());
    for (std::size_t i = begin; i < end; ++i) {
        if (i > begin && is_word(tokens[i]) && is_word(tokens[i - 1])) {
            out += ' ';
        }
        out += tokens[i].text;
    }
    return out;
}

bool is_elementary_type(std::string_view name)
{
    static constexpr std::array<std::string_view, 9> kBare = {
        "address", "payable", "bool", "string", "bytes", "byte", "uint", "int", "fixed",
    };
    if (std::find(kBare.begin(), kBare.end(), name) != kBare.end() || name == "ufixed") {
        return true;
    }
    for (std::string_view prefix : {"uint", "int", "bytes"}) {
        if (name.starts_with(prefix) && all_digits(name.substr(prefix.size()))) {
            return true;
        }
    }
    return false;
}

bool is_storage_location(std::string_view name)
{
    return name == "memory" || name == "storage" || name == "calldata" || name == "transient";
}

bool is_assignment_operator(std::string_view spelling)
{
    static constexpr std::array<std::string_view, 12> kOps = {
        "=", "+=", "-=", "*=", "/=", "%=", "|=", "&=", "^=", "<<=", ">>=", ">>>=",
    };
    return std::find(kOps.begin(), kOps.end(), spelling) != kOps.end();
}

bool is_statement_keyword(std::string_view name)
{
    static constexpr std::array<std::string_view, 22> kKeywords = {
        "return", "emit",   "delete",   "require",  "assert", "revert", "if",  "else",
        "for",    "while",  "do",       "try",      "catch",  "break",  "continue",
        "throw",  "unchecked", "assembly", "new",   "_",      "returns", "let",
    };
    return std::find(kKeywords.begin(), kKeywords.end(), name) != kKeywords.end();
}

std::vector<Declaration> find_declarations(TokenSpan tokens)
{
    std::vector<Declaration> out;
    if (tokens.empty()) {
        return out;
    }

    if (tokens[0].is("(")) {
        const std::size_t close = match_forward(tokens, 0);
        if (close == npos || close + 1 >= tokens.size() || !tokens[close + 1].is("=")) {
            return out;
        }
        std::size_t start = 1;
        int depth = 0;
        for (std::size_t i = 1; i <= close; ++i) {
            if (i < close && is_open_bracket(tokens[i])) {
                ++depth;
            } else if (i < close && is_close_bracket(tokens[i])) {
                --depth;
            }
            if (i == close || (depth == 0 && tokens[i].is(","))) {
                if (i - start >= 2 && tokens[i - 1].is_identifier() &&
                    !is_storage_location(tokens[i - 1].text) && tokens[i - 1].text != "payable") {
                    std::size_t type_end = i - 1;
                    if (type_end > start && is_storage_location(tokens[type_end - 1].text)) {
                        --type_end;
                    }
                    out.push_back({tokens[i - 1].text, join_tokens(tokens, start, type_end), i - 1});
                }
                start = i + 1;
            }
        }
        return out;
    }

    if (!tokens[0].is_identifier() || is_statement_keyword(tokens[0].text) || tokens[0].is("function")) {
        return out;
    }
    std::size_t i = 0;
    if (tokens[0].is("mapping")) {
        if (tokens.size() < 2 || !tokens[1].is("(")) {
            return out;
        }
        const std::size_t close = match_forward(tokens, 1);
        if (close == npos) {
            return out;
        }
        i = close + 1;
    } else {
        i = 1;
        while (i + 1 < tokens.size() && tokens[i].is(".") && tokens[i + 1].is_identifier()) {
            i += 2;
        }
        if (tokens[0].is("address") && i < tokens.size() && tokens[i].is("payable")) {
            ++i;
        }
    }
    while (i < tokens.size() && tokens[i].is("[")) {
        const std::size_t close = match_forward(tokens, i);
        if (close == npos) {
            return out;
        }
        i = close + 1;
    }
    std::size_t type_end = i;
    if (i < tokens.size() && tokens[i].is_identifier() && is_storage_location(tokens[i].text)) {
        ++i;
    }
    if (i < tokens.size() && tokens[i].is_identifier() && !is_statement_keyword(tokens[i].text) &&
        (i + 1 == tokens.size() || tokens[i + 1].is("=") || tokens[i + 1].is(";"))) {
        out.push_back({tokens[i].text, join_tokens(tokens, 0, type_end), i});
    }
    return out;
}

std::size_t lvalue_root(TokenSpan tokens, std::size_t last)
{
    std::size_t e = last;
    while (e < tokens.size()) {
        const Token& t = tokens[e];
        if (t.is("]")) {
            const std::size_t open = match_backward(tokens, e);
            if (open == npos || open == 0) {
                return npos;
            }
            e = open - 1;
            continue;
        }
        if (t.is_identifier()) {
            if (e >= 2 && tokens[e - 1].is(".")) {
                e -= 2;
                continue;
            }
            return e;
        }
        return npos;
    }
    return npos;
}

std::size_t expression_end(TokenSpan tokens, std::size_t begin)
{
    int depth = 0;
    for (std::size_t i = begin; i < tokens.size(); ++i) {
        if (is_open_bracket(tokens[i])) {
            ++depth;
        } else if (is_close_bracket(tokens[i])) {
            if (depth == 0) {
                return i;
            }
            --depth;
        } else if (depth == 0 && (tokens[i].is(",") || tokens[i].is(";"))) {
            return i;
        }
    }
    return tokens.size();
}

std::vector<WriteForm> find_write_forms(TokenSpan tokens)
{
    std::vector<WriteForm> out;
    const std::size_t n = tokens.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Token& t = tokens[k];
        if (t.kind == TokenKind::Punct && is_assignment_operator(t.text)) {
            if (k == 0) {
                continue;
            }
            const std::size_t value_end = expression_end(tokens, k + 1);
            if (tokens[k - 1].is(")")) {
                const std::size_t open = match_backward(tokens, k - 1);
                if (open == npos) {
                    continue;
                }
                std::size_t start = open + 1;
                int depth = 0;
                for (std::size_t i = open + 1; i <= k - 1; ++i) {
                    const bool at_end = i == k - 1;
                    if (!at_end && is_open_bracket(tokens[i])) {
                        ++depth;
                    } else if (!at_end && is_close_bracket(tokens[i])) {
                        --depth;
                    }
                    if (at_end || (depth == 0 && tokens[i].is(","))) {
                        if (i > start) {
                            const std::size_t root = lvalue_root(tokens, i - 1);
                            if (root != npos && root >= start) {
                                out.push_back({root, t.text, start, i, k + 1, value_end});
                            }
                        }
                        start = i + 1;
                    }
                }
            } else {
                const std::size_t root = lvalue_root(tokens, k - 1);
                if (root != npos) {
                    out.push_back({root, t.text, root, k, k + 1, value_end});
                }
            }
        } else if (t.is("++") || t.is("--")) {
            if (k > 0 && (tokens[k - 1].is_identifier() || tokens[k - 1].is("]"))) {
                const std::size_t root = lvalue_root(tokens, k - 1);
                if (root != npos) {
                    out.push_back({root, t.text, root, k, k, k});
                }
            } else if (k + 1 < n && tokens[k + 1].is_identifier()) {
                out.push_back({k + 1, t.text, k + 1, chain_end(tokens, k + 1), k, k});
            }
        } else if (t.is("delete") && k + 1 < n && tokens[k + 1].is_identifier()) {
            out.push_back({k + 1, "delete", k + 1, chain_end(tokens, k + 1), k, k});
        } else if ((t.is("push") || t.is("pop")) && t.is_identifier() && k >= 2 && tokens[k - 1].is(".") &&
                   k + 1 < n && tokens[k + 1].is("(")) {
            const std::size_t root = lvalue_root(tokens, k - 2);
            const std::size_t close = match_forward(tokens, k + 1);
            if (root != npos) {
                const std::size_t value_end = close == npos ? n : close;
                out.push_back({root, t.text, root, k - 1, k + 2, value_end});
            }
        }
    }
    return out;
}

std::vector<std::string> plain_identifiers(TokenSpan tokens, std::size_t begin, std::size_t end)
{
    std::vector<std::string> out;
    end = std::min(end, tokens.size());
    for (std::size_t i = begin; i < end; ++i) {
        if (tokens[i].is_identifier() && !(i > 0 && tokens[i - 1].is("."))) {
            out.push_back(tokens[i].text);
        }
    }
    return out;
}

int argument_count(TokenSpan tokens, std::size_t open, std::size_t close)
{
    if (close == npos || close <= open + 1) {
        return 0;
    }
    int count = 1;
    int depth = 0;
    for (std::size_t i = open + 1; i < close; ++i) {
        if (is_open_bracket(tokens[i])) {
            ++depth;
        } else if (is_close_bracket(tokens[i])) {
            --depth;
        } else if (depth == 0 && tokens[i].is(",")) {
            ++count;
        }
    }
    return count;
}

}  // namespace smartgraph::syntax
