#include "smartgraph/frontend.hpp"

#include "syntax.hpp"

#include <algorithm>
#include <set>

namespace smartgraph {

namespace {

using syntax::npos;
using syntax::TokenSpan;

// Region of a statement's tokens that may introduce local declarations.
TokenSpan declaration_region(const Statement& statement)
{
    TokenSpan tokens = statement.tokens;
    if (statement.kind == StatementKind::Loop && tokens.size() > 2 && tokens[0].is("for")) {
        std::size_t semi = 2;
        while (semi < tokens.size() && !tokens[semi].is(";")) {
            ++semi;
        }
        return tokens.subspan(2, semi - 2);
    }
    if (statement.kind == StatementKind::If || statement.kind == StatementKind::Loop ||
        statement.kind == StatementKind::TryCatch) {
        return {};
    }
    return tokens;
}

std::size_t declaration_offset(const Statement& statement)
{
    const bool for_header = statement.kind == StatementKind::Loop && statement.tokens.size() > 2 &&
                            statement.tokens[0].is("for");
    return for_header ? 2 : 0;
}

bool is_struct_literal_key(TokenSpan tokens, std::size_t i)
{
    return i > 0 && i + 1 < tokens.size() && tokens[i + 1].is(":") &&
           (tokens[i - 1].is("{") || tokens[i - 1].is(","));
}

void resolve_callable(FunctionDef& function, const std::set<std::string>& state_names)
{
    function.writes.clear();
    function.reads.clear();
    function.accesses.clear();
    function.state_writes.clear();

    std::set<std::string> shadowed;
    for (const auto* list : {&function.params, &function.returns}) {
        for (const ParamDef& param : *list) {
            if (state_names.contains(param.name)) {
                shadowed.insert(param.name);
            }
        }
    }

    const std::vector<const Statement*> flat = function.flattened();
    for (std::size_t index = 0; index < flat.size(); ++index) {
        const Statement& statement = *flat[index];
        const TokenSpan tokens = statement.tokens;

        const std::size_t decl_base = declaration_offset(statement);
        const std::vector<syntax::Declaration> declarations = syntax::find_declarations(declaration_region(statement));
        std::set<std::size_t> declared_positions;
        for (const syntax::Declaration& d : declarations) {
            declared_positions.insert(decl_base + d.name_index);
        }

        auto is_state_ref = [&](std::size_t i) {
            const Token& t = tokens[i];
            return t.is_identifier() && state_names.contains(t.text) && !shadowed.contains(t.text) &&
                   !(i > 0 && tokens[i - 1].is(".")) && !declared_positions.contains(i) &&
                   !is_struct_literal_key(tokens, i);
        };

        std::set<std::size_t> write_roots;
        for (const syntax::WriteForm& form : syntax::find_write_forms(tokens)) {
            if (!is_state_ref(form.root)) {
                continue;
            }
            write_roots.insert(form.root);

            StateWrite write;
            write.target = tokens[form.root].text;
            write.op = form.op;
            write.line = tokens[form.root].line;
            write.statement_index = index;
            int bracket_depth = 0;
            for (std::size_t i = form.target_begin; i < form.target_end && i < tokens.size(); ++i) {
                if (tokens[i].is("[")) {
                    ++bracket_depth;
                } else if (tokens[i].is("]")) {
                    --bracket_depth;
                } else if (bracket_depth > 0 && tokens[i].is_identifier() && !tokens[i - 1].is(".")) {
                    write.index_identifiers.push_back(tokens[i].text);
                }
            }
            write.value_identifiers = syntax::plain_identifiers(tokens, form.value_begin, form.value_end);
            if (form.value_end > form.value_begin) {
                const std::size_t lo = tokens[form.value_begin].offset;
                const std::size_t hi = tokens[form.value_end - 1].end();
                for (const CallSite& call : statement.calls) {
                    if (call.offset >= lo && call.offset < hi) {
                        write.value_call_offsets.push_back(call.offset);
                    }
                }
            }
            function.state_writes.push_back(std::move(write));
        }

        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (!is_state_ref(i)) {
                continue;
            }
            const AccessKind kind = write_roots.contains(i) ? AccessKind::Write : AccessKind::Read;
            function.accesses.push_back(StateAccess{tokens[i].text, kind, tokens[i].line, index});
            (kind == AccessKind::Write ? function.writes : function.reads).insert(tokens[i].text);
        }

        // Locals shadow state variables from the following statement on.
        for (const syntax::Declaration& d : declarations) {
            if (state_names.contains(d.name)) {
                shadowed.insert(d.name);
            }
        }
    }
}

void collect_linearized(const SourceUnit& unit, const ContractDef& contract, std::vector<const ContractDef*>& out,
                        std::set<std::string>& seen)
{
    for (const std::string& parent : contract.inherits) {
        if (!seen.insert(parent).second) {
            continue;
        }
        const ContractDef* def = unit.find_contract(parent);
        if (def == nullptr) {
            continue;
        }
        out.push_back(def);
        collect_linearized(unit, *def, out, seen);
    }
}

template <typename T>
void inherit_missing(std::vector<T>& into, const std::vector<T>& own, const std::vector<T>& from)
{
    for (const T& item : from) {
        auto same = [&](const T& other) { return other.name == item.name; };
        if (std::none_of(own.begin(), own.end(), same) && std::none_of(into.begin(), into.end(), same)) {
            into.push_back(item);
        }
    }
}

}  // namespace

ContractDef resolve_access_sets(const ContractDef& contract)
{
    ContractDef out = contract;
    std::set<std::string> state_names;
    for (const StateVarDef& var : out.state_vars) {
        state_names.insert(var.name);
    }
    for (const StateVarDef& var : out.inherited_state_vars) {
        state_names.insert(var.name);
    }
    for (FunctionDef& function : out.functions) {
        resolve_callable(function, state_names);
    }
    if (out.constructor) {
        resolve_callable(*out.constructor, state_names);
    }
    return out;
}

SourceUnit resolve_unit(SourceUnit unit)
{
    struct Inherited
    {
        std::vector<StateVarDef> state_vars;
        std::vector<EventDef> events;
        std::vector<ModifierDef> modifiers;
    };
    std::vector<Inherited> inherited(unit.contracts.size());

    for (std::size_t c = 0; c < unit.contracts.size(); ++c) {
        const ContractDef& contract = unit.contracts[c];
        std::set<std::string> reported;
        for (const std::string& parent : contract.inherits) {
            if (unit.find_contract(parent) == nullptr && reported.insert(parent).second) {
                unit.diagnostics.push_back(ParseDiagnostic{contract.line_span.first, DiagnosticSeverity::Warning,
                                                           "unresolved parent '" + parent + "' of '" +
                                                               contract.name + "'"});
            }
        }
        std::vector<const ContractDef*> ancestors;
        std::set<std::string> seen{contract.name};
        collect_linearized(unit, contract, ancestors, seen);
        for (const ContractDef* ancestor : ancestors) {
            inherit_missing(inherited[c].state_vars, contract.state_vars, ancestor->state_vars);
            inherit_missing(inherited[c].events, contract.events, ancestor->events);
            inherit_missing(inherited[c].modifiers, contract.modifiers, ancestor->modifiers);
        }
    }

    for (std::size_t c = 0; c < unit.contracts.size(); ++c) {
        ContractDef& contract = unit.contracts[c];
        contract.inherited_state_vars = std::move(inherited[c].state_vars);
        contract.inherited_events = std::move(inherited[c].events);
        contract.inherited_modifiers = std::move(inherited[c].modifiers);
        contract = resolve_access_sets(contract);
    }
    return unit;
}

}  // namespace smartgraph
