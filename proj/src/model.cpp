#include "smartgraph/model.hpp"

#include <algorithm>

namespace smartgraph {

std::string_view to_string(ContractKind kind)
{
    switch (kind) {
    case ContractKind::Contract:
        return "contract";
    case ContractKind::Interface:
        return "interface";
    case ContractKind::Library:
        return "library";
    }
    return "contract";
}

std::string_view to_string(Visibility visibility)
{
    switch (visibility) {
    case Visibility::Default:
        return "default";
    case Visibility::Public:
        return "public";
    case Visibility::External:
        return "external";
    case Visibility::Internal:
        return "internal";
    case Visibility::Private:
        return "private";
    }
    return "default";
}

std::string_view to_string(Mutability mutability)
{
    switch (mutability) {
    case Mutability::None:
        return "none";
    case Mutability::View:
        return "view";
    case Mutability::Pure:
        return "pure";
    case Mutability::Payable:
        return "payable";
    }
    return "none";
}

std::string_view to_string(StatementKind kind)
{
    switch (kind) {
    case StatementKind::Assignment:
        return "assignment";
    case StatementKind::Require:
        return "require";
    case StatementKind::Assert:
        return "assert";
    case StatementKind::Revert:
        return "revert";
    case StatementKind::If:
        return "if";
    case StatementKind::Loop:
        return "loop";
    case StatementKind::Emit:
        return "emit";
    case StatementKind::Call:
        return "call";
    case StatementKind::Return:
        return "return";
    case StatementKind::TryCatch:
        return "try_catch";
    case StatementKind::Other:
        return "other";
    }
    return "other";
}

std::string_view to_string(CallKind kind)
{
    switch (kind) {
    case CallKind::Internal:
        return "internal";
    case CallKind::ExternalMember:
        return "external_member";
    case CallKind::LowLevel:
        return "low_level";
    }
    return "internal";
}

std::string_view to_string(DiagnosticSeverity severity)
{
    return severity == DiagnosticSeverity::Error ? "error" : "warning";
}

std::optional<ContractKind> contract_kind_from_string(std::string_view text)
{
    for (ContractKind kind : {ContractKind::Contract, ContractKind::Interface, ContractKind::Library}) {
        if (to_string(kind) == text) {
            return kind;
        }
    }
    return std::nullopt;
}

std::optional<DiagnosticSeverity> diagnostic_severity_from_string(std::string_view text)
{
    if (text == "error") {
        return DiagnosticSeverity::Error;
    }
    if (text == "warning") {
        return DiagnosticSeverity::Warning;
    }
    return std::nullopt;
}

std::string_view CallSite::final_segment() const
{
    const std::string_view text = callee;
    const std::size_t dot = text.rfind('.');
    return dot == std::string_view::npos ? text : text.substr(dot + 1);
}

std::string_view CallSite::receiver() const
{
    const std::string_view text = callee;
    const std::size_t dot = text.rfind('.');
    return dot == std::string_view::npos ? std::string_view{} : text.substr(0, dot);
}

namespace {

void flatten_into(const std::vector<Statement>& statements, std::vector<const Statement*>& out)
{
    for (const Statement& statement : statements) {
        out.push_back(&statement);
        flatten_into(statement.children, out);
    }
}

template <typename T>
const T* find_named(const std::vector<T>& own, const std::vector<T>& inherited, std::string_view name)
{
    auto by_name = [&](const T& item) { return item.name == name; };
    if (auto it = std::find_if(own.begin(), own.end(), by_name); it != own.end()) {
        return &*it;
    }
    if (auto it = std::find_if(inherited.begin(), inherited.end(), by_name); it != inherited.end()) {
        return &*it;
    }
    return nullptr;
}

}  // namespace

std::vector<const Statement*> FunctionDef::flattened() const
{
    std::vector<const Statement*> out;
    flatten_into(body, out);
    return out;
}

const StateVarDef* ContractDef::find_state_var(std::string_view var_name) const
{
    return find_named(state_vars, inherited_state_vars, var_name);
}

const EventDef* ContractDef::find_event(std::string_view event_name) const
{
    return find_named(events, inherited_events, event_name);
}

const ModifierDef* ContractDef::find_modifier(std::string_view modifier_name) const
{
    return find_named(modifiers, inherited_modifiers, modifier_name);
}

const StructDef* ContractDef::find_struct(std::string_view struct_name) const
{
    auto it = std::find_if(structs.begin(), structs.end(),
                           [&](const StructDef& s) { return s.name == struct_name; });
    return it == structs.end() ? nullptr : &*it;
}

std::vector<const FunctionDef*> ContractDef::callables() const
{
    std::vector<const FunctionDef*> out;
    out.reserve(functions.size() + 1);
    for (const FunctionDef& function : functions) {
        out.push_back(&function);
    }
    if (constructor) {
        out.push_back(&*constructor);
    }
    return out;
}

const ContractDef* SourceUnit::find_contract(std::string_view contract_name) const
{
    auto it = std::find_if(contracts.begin(), contracts.end(),
                           [&](const ContractDef& c) { return c.name == contract_name; });
    return it == contracts.end() ? nullptr : &*it;
}

bool SourceUnit::has_errors() const
{
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const ParseDiagnostic& d) { return d.severity == DiagnosticSeverity::Error; });
}

}  // namespace smartgraph
