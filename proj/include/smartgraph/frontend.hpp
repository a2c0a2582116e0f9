/**
 * @file frontend.hpp
 * @brief Tolerant structural parser producing a SourceUnit.
 *
 * The parser tracks braces and classifies statements by their leading
 * keyword. Expressions stay as token runs; only identifiers, call sites and
 * assignment targets are extracted from them.
 */

#pragma once

#include "smartgraph/model.hpp"

#include <string_view>

namespace smartgraph {

/// Maximum statement nesting the parser descends into before summarizing.
inline constexpr int kMaxNestingDepth = 200;

/**
 * Parses Solidity text. Never throws on malformed input: unrecoverable
 * regions are reported as diagnostics and parsing resumes at the next
 * brace-balanced top-level point. Access sets are left empty.
 */
[[nodiscard]] SourceUnit parse_source(std::string_view source, std::string_view path);

/// Populates writes, reads, accesses and state_writes of every callable in `contract`.
/// Inherited state variables come from contract.inherited_state_vars (see resolve_unit).
[[nodiscard]] ContractDef resolve_access_sets(const ContractDef& contract);

/**
 * Resolves inheritance by name inside the unit, copies inherited members into
 * each child, then resolves access sets. Unknown parents become warning
 * diagnostics.
 */
[[nodiscard]] SourceUnit resolve_unit(SourceUnit unit);

/// parse_source followed by resolve_unit.
[[nodiscard]] SourceUnit load_source(std::string_view source, std::string_view path);

/// Solidity identifier check: letters, digits, '_' or '$', not starting with a digit.
[[nodiscard]] bool is_valid_identifier(std::string_view text);

}  // namespace smartgraph
