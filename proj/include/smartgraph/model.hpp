/**
 * @file model.hpp
 * @brief Structural inventory of a Solidity source unit.
 */

#pragma once

#include "smartgraph/lexer.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace smartgraph {

/// 1-based inclusive line range.
struct LineSpan
{
    int first = 0;
    int last = 0;

    [[nodiscard]] bool contains(int line) const { return line >= first && line <= last; }

    friend bool operator==(const LineSpan&, const LineSpan&) = default;
};

enum class ContractKind { Contract, Interface, Library };
enum class Visibility { Default, Public, External, Internal, Private };
enum class Mutability { None, View, Pure, Payable };

enum class StatementKind {
    Assignment,
    Require,
    Assert,
    Revert,
    If,
    Loop,
    Emit,
    Call,
    Return,
    TryCatch,
    Other,
};

enum class CallKind { Internal, ExternalMember, LowLevel };

enum class DiagnosticSeverity { Warning, Error };

[[nodiscard]] std::string_view to_string(ContractKind kind);
[[nodiscard]] std::string_view to_string(Visibility visibility);
[[nodiscard]] std::string_view to_string(Mutability mutability);
[[nodiscard]] std::string_view to_string(StatementKind kind);
[[nodiscard]] std::string_view to_string(CallKind kind);
[[nodiscard]] std::string_view to_string(DiagnosticSeverity severity);

[[nodiscard]] std::optional<ContractKind> contract_kind_from_string(std::string_view text);
[[nodiscard]] std::optional<DiagnosticSeverity> diagnostic_severity_from_string(std::string_view text);

struct ParseDiagnostic
{
    int line = 1;
    DiagnosticSeverity severity = DiagnosticSeverity::Warning;
    std::string message;

    friend bool operator==(const ParseDiagnostic&, const ParseDiagnostic&) = default;
};

struct ImportRef
{
    std::string path;
    int line = 0;
};

struct ParamDef
{
    std::string type_name;
    std::string name;  // empty when unnamed
};

struct CallSite
{
    std::string callee;  // dotted text, e.g. "token.transfer"
    CallKind kind = CallKind::Internal;
    int line = 0;
    int arg_count = 0;
    // Position in the function's pre-order flattened statement list.
    std::size_t statement_index = 0;
    // Source offset of the callee's final segment; orders calls inside one statement.
    std::size_t offset = 0;
    bool has_call_options = false;  // `{value: ...}` block before the argument list

    /// Final dotted segment of the callee ("transfer" for "token.transfer").
    [[nodiscard]] std::string_view final_segment() const;
    /// Everything before the final segment, or empty for a plain call.
    [[nodiscard]] std::string_view receiver() const;
};

struct Statement
{
    StatementKind kind = StatementKind::Other;
    int line = 0;
    std::string text;            // original source, trimmed; header only for if/loop/try
    std::vector<Token> tokens;   // noise-stripped tokens of the same region
    std::vector<Statement> children;
    std::vector<CallSite> calls;  // call sites in `tokens`; statement_index filled on flattening
    std::string emitted_event;    // set for kind == Emit
};

enum class AccessKind { Read, Write };

/// One appearance of a state variable in a function body, in source order.
struct StateAccess
{
    std::string name;
    AccessKind kind = AccessKind::Read;
    int line = 0;
    std::size_t statement_index = 0;
};

/// A single mutation of a state variable (assignment, ++/--, delete, push/pop).
struct StateWrite
{
    std::string target;
    std::string op;  // "=", "+=", "++", "delete", "push", ...
    int line = 0;
    std::size_t statement_index = 0;
    std::vector<std::string> index_identifiers;  // identifiers inside the target's [...] groups
    std::vector<std::string> value_identifiers;  // identifiers on the value side
    std::vector<std::size_t> value_call_offsets;  // CallSite::offset of calls on the value side
};

struct ModifierRef
{
    std::string name;
    std::string arguments;  // raw text between the parentheses, empty if none
};

struct FunctionDef
{
    std::string name;
    Visibility visibility = Visibility::Default;
    Mutability mutability = Mutability::None;
    bool has_body = false;
    std::vector<ModifierRef> modifiers;
    std::vector<ParamDef> params;
    std::vector<ParamDef> returns;
    std::vector<Statement> body;
    LineSpan line_span;
    std::set<std::string> writes;
    std::set<std::string> reads;
    std::vector<CallSite> calls;
    std::vector<StateAccess> accesses;
    std::vector<StateWrite> state_writes;

    /// Pre-order flattening of the body; indices match CallSite::statement_index.
    [[nodiscard]] std::vector<const Statement*> flattened() const;
    [[nodiscard]] bool has_modifier() const { return !modifiers.empty(); }
};

struct ModifierDef
{
    std::string name;
    std::vector<ParamDef> params;
    std::vector<Statement> body;
    LineSpan line_span;
};

struct StateVarDef
{
    std::string name;
    std::string type_name;
    Visibility visibility = Visibility::Default;
    bool is_constant = false;
    int line = 0;
};

struct EventDef
{
    std::string name;
    std::vector<ParamDef> params;
    int line = 0;
};

struct StructDef
{
    std::string name;
    std::vector<ParamDef> fields;
    int line = 0;
};

struct ContractDef
{
    std::string name;
    ContractKind kind = ContractKind::Contract;
    bool is_abstract = false;
    std::vector<std::string> inherits;
    std::vector<StateVarDef> state_vars;
    std::vector<FunctionDef> functions;
    std::vector<ModifierDef> modifiers;
    std::vector<EventDef> events;
    std::vector<StructDef> structs;
    std::optional<FunctionDef> constructor;
    LineSpan line_span;
    // State variables inherited from parsed ancestors; filled by resolve_unit.
    std::vector<StateVarDef> inherited_state_vars;
    std::vector<EventDef> inherited_events;
    std::vector<ModifierDef> inherited_modifiers;

    [[nodiscard]] const StateVarDef* find_state_var(std::string_view var_name) const;
    [[nodiscard]] const EventDef* find_event(std::string_view event_name) const;
    [[nodiscard]] const ModifierDef* find_modifier(std::string_view modifier_name) const;
    [[nodiscard]] const StructDef* find_struct(std::string_view struct_name) const;

    /// Functions followed by the constructor, if any.
    [[nodiscard]] std::vector<const FunctionDef*> callables() const;
};

struct SourceUnit
{
    std::string path;
    std::vector<std::string> pragmas;
    std::vector<ImportRef> imports;
    std::vector<ContractDef> contracts;
    std::vector<ParseDiagnostic> diagnostics;

    [[nodiscard]] const ContractDef* find_contract(std::string_view contract_name) const;
    [[nodiscard]] bool has_errors() const;
};

}  // namespace smartgraph
