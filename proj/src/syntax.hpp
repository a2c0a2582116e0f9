// Internal token-run helpers shared by the parser, the access-set resolver
// and the detectors. Not installed.

#pragma once

#include "smartgraph/lexer.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smartgraph::syntax {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

using TokenSpan = std::span<const Token>;

[[nodiscard]] std::string to_lower(std::string_view text);
[[nodiscard]] bool contains_ci(std::string_view haystack, std::string_view needle);

[[nodiscard]] bool is_open_bracket(const Token& token);
[[nodiscard]] bool is_close_bracket(const Token& token);

/// Index of the bracket closing tokens[open], counting only the same bracket kind.
[[nodiscard]] std::size_t match_forward(TokenSpan tokens, std::size_t open, std::size_t limit = npos);
/// Index of the bracket opening tokens[close].
[[nodiscard]] std::size_t match_backward(TokenSpan tokens, std::size_t close);

/// Concatenates spellings, separating adjacent word tokens with one space.
[[nodiscard]] std::string join_tokens(TokenSpan tokens, std::size_t begin, std::size_t end);

[[nodiscard]] bool is_elementary_type(std::string_view name);
[[nodiscard]] bool is_storage_location(std::string_view name);
[[nodiscard]] bool is_assignment_operator(std::string_view spelling);
[[nodiscard]] bool is_statement_keyword(std::string_view name);

struct Declaration
{
    std::string name;
    std::string type_name;
    std::size_t name_index = 0;
};

/// Local variable declarations introduced by a simple statement or a for-header.
[[nodiscard]] std::vector<Declaration> find_declarations(TokenSpan tokens);

/// Walks an lvalue postfix chain (a.b[c].d) backwards from `last` to its root identifier.
[[nodiscard]] std::size_t lvalue_root(TokenSpan tokens, std::size_t last);

struct WriteForm
{
    std::size_t root = 0;         // token index of the mutated identifier
    std::string op;
    std::size_t target_begin = 0;  // [target_begin, target_end) covers the lvalue
    std::size_t target_end = 0;
    std::size_t value_begin = 0;   // [value_begin, value_end) covers the value side
    std::size_t value_end = 0;
};

/// Every mutation syntax in the run: assignments, ++/--, delete, .push()/.pop().
[[nodiscard]] std::vector<WriteForm> find_write_forms(TokenSpan tokens);

/// End of the expression starting at `begin`: first ',' or ';' at depth 0 or unmatched closer.
[[nodiscard]] std::size_t expression_end(TokenSpan tokens, std::size_t begin);

/// Identifiers in [begin, end) that are not member names (not preceded by '.').
[[nodiscard]] std::vector<std::string> plain_identifiers(TokenSpan tokens, std::size_t begin, std::size_t end);

/// Number of top-level comma-separated arguments between tokens[open] and its match.
[[nodiscard]] int argument_count(TokenSpan tokens, std::size_t open, std::size_t close);

}  // namespace smartgraph::syntax
