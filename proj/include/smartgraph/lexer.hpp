/**
 * @file lexer.hpp
 * @brief Comment/string blanking and a tolerant token scanner for Solidity.
 */

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace smartgraph {

enum class TokenKind { Identifier, Number, String, Punct, Unknown };

struct Token
{
    TokenKind kind = TokenKind::Unknown;
    std::string text;  // noise-stripped spelling
    int line = 1;
    std::size_t offset = 0;  // byte offset into the source
    std::size_t length = 0;

    [[nodiscard]] bool is(std::string_view spelling) const { return text == spelling; }
    [[nodiscard]] bool is_identifier() const { return kind == TokenKind::Identifier; }
    [[nodiscard]] std::size_t end() const { return offset + length; }
};

struct StrippedSource
{
    std::string text;
    // Line where an unterminated block comment starts, 0 if none.
    int unterminated_comment_line = 0;
    // Line of the first unterminated string literal, 0 if none.
    int unterminated_string_line = 0;
};

/// Character used to overwrite string literal contents.
inline constexpr char kStringPlaceholder = '_';

/**
 * Blanks comments to spaces and string literal contents to placeholders.
 *
 * Offsets and line breaks are preserved, so token positions in the stripped
 * text address the original source.
 */
[[nodiscard]] StrippedSource strip_noise_detailed(std::string_view source);

[[nodiscard]] std::string strip_noise(std::string_view source);

/// Tokenizes already-stripped text. Never fails; unknown bytes become Unknown tokens.
[[nodiscard]] std::vector<Token> tokenize(std::string_view stripped);

[[nodiscard]] std::size_t count_lines(std::string_view text);

}  // namespace smartgraph
