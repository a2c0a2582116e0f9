#include "smartgraph/detectors.hpp"

#include "smartgraph/graph.hpp"
#include "syntax.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

namespace smartgraph {

namespace {

using syntax::contains_ci;

constexpr std::string_view kExternalDependency = "External Dependency and State Integrity";
constexpr std::string_view kTransactional = "Transactional and Economic Logic";
constexpr std::string_view kComputational = "Computational and Operational Flaws";
constexpr std::string_view kSemantic = "Semantic and Maintenance Errors";

struct FlatStatement
{
    const Statement* statement = nullptr;
    bool inside_try = false;
};

void flatten_with_context(const std::vector<Statement>& statements, bool inside_try, std::vector<FlatStatement>& out)
{
    for (const Statement& s : statements) {
        out.push_back({&s, inside_try});
        flatten_with_context(s.children, inside_try || s.kind == StatementKind::TryCatch, out);
    }
}

std::vector<FlatStatement> flatten_with_context(const FunctionDef& function)
{
    std::vector<FlatStatement> out;
    flatten_with_context(function.body, false, out);
    return out;
}

Warning make_warning(DetectorId id, Severity severity, const ContractDef& contract,
                     std::optional<std::string> function, int line, std::string message)
{
    Warning w;
    w.detector = id;
    w.category = std::string(category_of(id));
    w.severity = severity;
    w.contract = contract.name;
    w.function = std::move(function);
    w.line = std::max(line, 1);
    w.message = std::move(message);
    return w;
}

std::string state_node(const ContractDef& contract, std::string_view name)
{
    return node_id(contract.name, NodeKind::StateVar, name);
}

void push_unique(std::vector<std::string>& list, std::string value)
{
    if (std::find(list.begin(), list.end(), value) == list.end()) {
        list.push_back(std::move(value));
    }
}

bool has_identifier(const Statement& statement, std::string_view name)
{
    for (std::size_t i = 0; i < statement.tokens.size(); ++i) {
        const Token& t = statement.tokens[i];
        if (t.is_identifier() && t.text == name && !(i > 0 && statement.tokens[i - 1].is("."))) {
            return true;
        }
    }
    return false;
}

// ---- D1 / D11 / D12 ---------------------------------------------------------

struct PairWording
{
    DetectorId id;
    std::string_view missing_exit;   // word for v in writes(f) \ writes(g)
    std::string_view missing_entry;  // word for u in writes(g) \ writes(f)
};

PairWording wording_for(PairKind kind)
{
    switch (kind) {
    case PairKind::Stake:
        return {DetectorId::D1_stake_asymmetry, "Unstake", "Stake"};
    case PairKind::Collateral:
        return {DetectorId::D11_collateral_logic, "Repay", "Borrow"};
    case PairKind::Points:
        return {DetectorId::D12_point_system, "Spend", "Earn"};
    }
    return {DetectorId::D1_stake_asymmetry, "Unstake", "Stake"};
}

std::vector<KeywordPair> pairs_for(PairKind kind, const KeywordConfig& cfg)
{
    switch (kind) {
    case PairKind::Stake:
        return {KeywordPair{cfg.stake_names, cfg.unstake_names}};
    case PairKind::Collateral:
        return cfg.collateral_pairs;
    case PairKind::Points:
        return cfg.earn_spend_pairs;
    }
    return {};
}

// ---- D8 helpers ---------------------------------------------------------------

// True if the call's result is bound by an assignment or declaration in its statement.
bool result_assigned(const Statement& statement, const CallSite& call)
{
    const syntax::TokenSpan tokens = statement.tokens;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        if (tokens[k].kind != TokenKind::Punct || !syntax::is_assignment_operator(tokens[k].text)) {
            continue;
        }
        const std::size_t end = syntax::expression_end(tokens, k + 1);
        if (end > k + 1 && call.offset >= tokens[k + 1].offset && call.offset < tokens[end - 1].end()) {
            return true;
        }
    }
    return false;
}

// ---- D7 helpers ---------------------------------------------------------------

int arithmetic_operator_count(const Statement& statement)
{
    int count = 0;
    const auto& tokens = statement.tokens;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        if (t.kind == TokenKind::Punct) {
            static constexpr std::string_view kOps[] = {"+", "-", "*", "/", "%", "+=", "-=", "*=", "/=", "%="};
            if (std::find(std::begin(kOps), std::end(kOps), t.text) != std::end(kOps)) {
                ++count;
            }
        } else if (t.is_identifier() && (t.is("mul") || t.is("div") || t.is("add") || t.is("sub")) &&
                   i + 1 < tokens.size() && tokens[i + 1].is("(")) {
            ++count;
        }
    }
    return count;
}

// ---- D10 helpers --------------------------------------------------------------

std::string normalize_type(std::string_view type)
{
    // Spaces survive only between two word characters ("address payable").
    const auto word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$'; };
    std::string compact;
    bool pending_space = false;
    for (char c : type) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = true;
            continue;
        }
        if (pending_space && !compact.empty() && word(compact.back()) && word(c)) {
            compact += ' ';
        }
        pending_space = false;
        compact += c;
    }
    if (compact == "uint") {
        return "uint256";
    }
    if (compact == "int") {
        return "int256";
    }
    if (compact == "byte") {
        return "bytes1";
    }
    if (compact.starts_with("uint[") || compact.starts_with("int[")) {
        return compact.insert(compact.find('['), "256");
    }
    return compact;
}

std::string signature_of(const FunctionDef& function)
{
    std::string out = function.name + "(";
    for (std::size_t i = 0; i < function.params.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += normalize_type(function.params[i].type_name);
    }
    out += ")";
    if (function.mutability != Mutability::None) {
        out += " ";
        out += to_string(function.mutability);
    }
    return out;
}

std::string join(const std::vector<std::string>& items, std::string_view separator)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) {
            out += separator;
        }
        out += items[i];
    }
    return out;
}

// Contracts related by inheritance to `contract`, including itself.
std::set<std::string> related_contracts(const SourceUnit& unit, const ContractDef& contract)
{
    std::map<std::string, std::set<std::string>> ancestors;
    for (const ContractDef& c : unit.contracts) {
        std::set<std::string>& seen = ancestors[c.name];
        std::vector<std::string> stack(c.inherits.begin(), c.inherits.end());
        while (!stack.empty()) {
            std::string next = std::move(stack.back());
            stack.pop_back();
            if (next == c.name || !seen.insert(next).second) {
                continue;
            }
            if (const ContractDef* def = unit.find_contract(next)) {
                stack.insert(stack.end(), def->inherits.begin(), def->inherits.end());
            }
        }
    }
    std::set<std::string> out{contract.name};
    for (const std::string& a : ancestors[contract.name]) {
        out.insert(a);
    }
    for (const auto& [name, set] : ancestors) {
        if (set.contains(contract.name)) {
            out.insert(name);
        }
    }
    return out;
}

void collect_statement_calls(const std::vector<Statement>& statements, std::vector<const CallSite*>& out)
{
    for (const Statement& s : statements) {
        for (const CallSite& call : s.calls) {
            out.push_back(&call);
        }
        collect_statement_calls(s.children, out);
    }
}

}  // namespace

std::string_view to_string(DetectorId id)
{
    switch (id) {
    case DetectorId::D1_stake_asymmetry:
        return "D1_stake_asymmetry";
    case DetectorId::D2_missing_exit_validation:
        return "D2_missing_exit_validation";
    case DetectorId::D3_unprotected_entry:
        return "D3_unprotected_entry";
    case DetectorId::D4_price_lag:
        return "D4_price_lag";
    case DetectorId::D5_external_dependency:
        return "D5_external_dependency";
    case DetectorId::D6_supply_hooks:
        return "D6_supply_hooks";
    case DetectorId::D7_complex_calculation:
        return "D7_complex_calculation";
    case DetectorId::D8_unchecked_low_level:
        return "D8_unchecked_low_level";
    case DetectorId::D9_naming_ambiguity:
        return "D9_naming_ambiguity";
    case DetectorId::D10_legacy_signature:
        return "D10_legacy_signature";
    case DetectorId::D11_collateral_logic:
        return "D11_collateral_logic";
    case DetectorId::D12_point_system:
        return "D12_point_system";
    }
    return "D1_stake_asymmetry";
}

std::string_view to_string(Severity severity)
{
    switch (severity) {
    case Severity::Info:
        return "info";
    case Severity::Medium:
        return "medium";
    case Severity::High:
        return "high";
    }
    return "info";
}

std::optional<DetectorId> detector_from_string(std::string_view text)
{
    auto same = [](std::string_view a, std::string_view b) {
        return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
                   return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
               });
    };
    for (DetectorId id : kAllDetectors) {
        const std::string_view full = to_string(id);
        if (same(full, text) || same(full.substr(0, full.find('_')), text)) {
            return id;
        }
    }
    return std::nullopt;
}

std::optional<Severity> severity_from_string(std::string_view text)
{
    for (Severity s : {Severity::Info, Severity::Medium, Severity::High}) {
        if (to_string(s) == text) {
            return s;
        }
    }
    return std::nullopt;
}

std::string_view category_of(DetectorId id)
{
    switch (id) {
    case DetectorId::D5_external_dependency:
    case DetectorId::D6_supply_hooks:
    case DetectorId::D11_collateral_logic:
        return kExternalDependency;
    case DetectorId::D1_stake_asymmetry:
    case DetectorId::D2_missing_exit_validation:
    case DetectorId::D4_price_lag:
    case DetectorId::D12_point_system:
        return kTransactional;
    case DetectorId::D3_unprotected_entry:
    case DetectorId::D7_complex_calculation:
    case DetectorId::D8_unchecked_low_level:
        return kComputational;
    case DetectorId::D9_naming_ambiguity:
    case DetectorId::D10_legacy_signature:
        return kSemantic;
    }
    return kTransactional;
}

int statement_distance(std::size_t a, std::size_t b)
{
    const std::size_t gap = a > b ? a - b : b - a;
    return gap == 0 ? 0 : static_cast<int>(gap - 1);
}

int edit_distance(std::string_view a, std::string_view b)
{
    std::vector<int> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) {
        row[j] = static_cast<int>(j);
    }
    for (std::size_t i = 1; i <= a.size(); ++i) {
        int diagonal = row[0];
        row[0] = static_cast<int>(i);
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const int above = row[j];
            const int substitution = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
            row[j] = std::min({above + 1, row[j - 1] + 1, substitution});
            diagonal = above;
        }
    }
    return row[b.size()];
}

std::vector<Warning> detect_stake_asymmetry(const ContractDef& contract, const KeywordConfig& cfg, PairKind pair_kind)
{
    const PairWording wording = wording_for(pair_kind);
    std::vector<Warning> out;
    std::set<std::tuple<std::string, std::string>> emitted;  // (function id, message)

    for (const KeywordPair& pair : pairs_for(pair_kind, cfg)) {
        for (const FunctionDef& f : contract.functions) {
            if (!matches_any(f.name, pair.entries) || f.writes.empty()) {
                continue;
            }
            const std::string f_id = callable_node_id(contract, f);
            for (const FunctionDef& g : contract.functions) {
                if (!matches_any(g.name, pair.exits)) {
                    continue;
                }
                const std::string g_id = callable_node_id(contract, g);
                auto emit = [&](const FunctionDef& at, const std::string& at_id, std::string_view word,
                                const std::string& var) {
                    std::string message =
                        "Inconsistent State Update: Missing " + std::string(word) + " Logic for " + var;
                    if (!emitted.emplace(at_id + "|" + f_id + "|" + g_id, message).second) {
                        return;
                    }
                    Warning w = make_warning(wording.id, Severity::Medium, contract, at.name, at.line_span.first,
                                             std::move(message));
                    w.related_symbols = {f.name, g.name, var};
                    w.related_nodes = {f_id, g_id, state_node(contract, var)};
                    out.push_back(std::move(w));
                };
                for (const std::string& v : f.writes) {
                    if (!g.writes.contains(v)) {
                        emit(g, g_id, wording.missing_exit, v);
                    }
                }
                for (const std::string& u : g.writes) {
                    if (!f.writes.contains(u)) {
                        emit(f, f_id, wording.missing_entry, u);
                    }
                }
            }
        }
    }
    return out;
}

std::vector<Warning> detect_missing_exit_validation(const ContractDef& contract, const KeywordConfig& cfg)
{
    std::vector<Warning> out;
    for (const FunctionDef& f : contract.functions) {
        if (!f.has_body || !matches_any(f.name, cfg.exit_names)) {
            continue;
        }
        bool found_check = f.has_modifier();
        for (const Statement* s : f.flattened()) {
            if (s->kind == StatementKind::Require || s->kind == StatementKind::Assert || s->kind == StatementKind::If ||
                s->kind == StatementKind::TryCatch) {
                found_check = true;
                break;
            }
        }
        if (found_check) {
            continue;
        }
        Warning w = make_warning(DetectorId::D2_missing_exit_validation, Severity::High, contract, f.name,
                                 f.line_span.first, "High Risk: Missing Validation Logic in function " + f.name);
        for (const CallSite& call : f.calls) {
            push_unique(w.related_symbols, call.callee);
        }
        w.related_nodes = {callable_node_id(contract, f)};
        if (std::any_of(f.calls.begin(), f.calls.end(), [](const CallSite& c) { return c.kind != CallKind::Internal; })) {
            w.related_nodes.push_back(external_boundary_id(contract.name));
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Warning> detect_unprotected_entry(const SourceUnit& unit, const ContractDef& contract)
{
    const std::set<std::string> related = related_contracts(unit, contract);

    // (caller, call) pairs from all callables and modifiers of related contracts.
    std::vector<std::pair<const void*, const CallSite*>> invocations;
    for (const std::string& name : related) {
        const ContractDef* def = name == contract.name ? &contract : unit.find_contract(name);
        if (def == nullptr) {
            continue;
        }
        for (const FunctionDef* callable : def->callables()) {
            std::vector<const CallSite*> calls;
            collect_statement_calls(callable->body, calls);
            for (const CallSite* call : calls) {
                invocations.emplace_back(callable, call);
            }
        }
        for (const ModifierDef& modifier : def->modifiers) {
            std::vector<const CallSite*> calls;
            collect_statement_calls(modifier.body, calls);
            for (const CallSite* call : calls) {
                invocations.emplace_back(&modifier, call);
            }
        }
    }

    std::vector<Warning> out;
    for (const FunctionDef& f : contract.functions) {
        if (f.visibility != Visibility::Public && f.visibility != Visibility::External) {
            continue;
        }
        const bool invoked = std::any_of(invocations.begin(), invocations.end(), [&](const auto& entry) {
            const CallSite& call = *entry.second;
            if (entry.first == &f || call.final_segment() != f.name) {
                return false;
            }
            const std::string_view receiver = call.receiver();
            return receiver.empty() || receiver == "this" || receiver == "super" ||
                   related.contains(std::string(receiver));
        });
        if (invoked) {
            continue;
        }
        const bool guarded = std::any_of(f.modifiers.begin(), f.modifiers.end(),
                                         [](const ModifierRef& m) { return contains_ci(m.name, "only"); });
        if (guarded) {
            continue;
        }
        for (const ParamDef& p : f.params) {
            if (p.name.empty()) {
                continue;
            }
            std::vector<std::string> targets;
            for (const StateWrite& w : f.state_writes) {
                const bool via_value =
                    std::find(w.value_identifiers.begin(), w.value_identifiers.end(), p.name) != w.value_identifiers.end();
                const bool via_index =
                    std::find(w.index_identifiers.begin(), w.index_identifiers.end(), p.name) != w.index_identifiers.end();
                if (via_value || via_index) {
                    push_unique(targets, w.target);
                }
            }
            if (targets.empty()) {
                continue;
            }
            Warning w = make_warning(DetectorId::D3_unprotected_entry, Severity::High, contract, f.name,
                                     f.line_span.first,
                                     "Potential Vulnerability: Unprotected external function " + f.name +
                                         " manipulates state via param " + p.name);
            w.related_symbols.push_back(p.name);
            w.related_nodes.push_back(callable_node_id(contract, f));
            for (const std::string& t : targets) {
                w.related_symbols.push_back(t);
                w.related_nodes.push_back(state_node(contract, t));
            }
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<Warning> detect_price_lag(const ContractDef& contract, const KeywordConfig& cfg)
{
    std::vector<Warning> out;
    for (const FunctionDef* f : contract.callables()) {
        std::vector<const CallSite*> price;
        std::vector<const CallSite*> transfer;
        for (const CallSite& call : f->calls) {
            if (matches_any(call.final_segment(), cfg.price_names)) {
                price.push_back(&call);
            }
            if (matches_any(call.final_segment(), cfg.transfer_names)) {
                transfer.push_back(&call);
            }
        }
        if (price.empty() || transfer.empty()) {
            continue;
        }
        for (const CallSite* cp : price) {
            for (const CallSite* ct : transfer) {
                if (cp == ct) {
                    continue;
                }
                const bool transfer_first =
                    std::tie(ct->statement_index, ct->offset) < std::tie(cp->statement_index, cp->offset);
                const int distance = statement_distance(cp->statement_index, ct->statement_index);
                if (!transfer_first && distance <= cfg.max_distance) {
                    continue;
                }
                std::string message = "Potential Price-Lag Vulnerability: Excessive logic gap between price update "
                                      "and transfer in " +
                                      f->name + " (" + cp->callee + " at line " + std::to_string(cp->line) + ", " +
                                      ct->callee + " at line " + std::to_string(ct->line) + ", distance " +
                                      std::to_string(distance) + " statements";
                message += transfer_first ? ", transfer precedes price update)" : ")";
                message += "; intermediate operations flagged for 'Flash Loan' or 'Price Manipulation' risk";
                Warning w = make_warning(DetectorId::D4_price_lag, Severity::High, contract, f->name,
                                         std::max(cp->line, ct->line), std::move(message));
                w.related_symbols = {cp->callee, ct->callee};
                w.related_nodes = {callable_node_id(contract, *f)};
                if (cp->kind != CallKind::Internal || ct->kind != CallKind::Internal) {
                    w.related_nodes.push_back(external_boundary_id(contract.name));
                }
                out.push_back(std::move(w));
            }
        }
    }
    return out;
}

std::vector<Warning> detect_external_dependency(const ContractDef& contract)
{
    static const std::vector<std::string> kCritical = {"supply", "fee", "price", "rate"};
    std::vector<Warning> out;
    for (const FunctionDef* f : contract.callables()) {
        const std::vector<const Statement*> flat = f->flattened();
        std::map<std::size_t, const CallSite*> external_by_offset;
        for (const CallSite& call : f->calls) {
            if (call.kind != CallKind::Internal) {
                external_by_offset.emplace(call.offset, &call);
            }
        }
        if (external_by_offset.empty()) {
            continue;
        }

        // name -> callee that tainted it
        std::map<std::string, std::string> tainted;
        std::set<std::pair<std::string, int>> reported;
        for (std::size_t index = 0; index < flat.size(); ++index) {
            const Statement& s = *flat[index];
            const syntax::TokenSpan tokens = s.tokens;

            struct Binding
            {
                std::string name;
                std::size_t value_begin;
                std::size_t value_end;
            };
            std::vector<Binding> bindings;
            for (const syntax::WriteForm& form : syntax::find_write_forms(tokens)) {
                bindings.push_back({tokens[form.root].text, form.value_begin, form.value_end});
            }
            if (s.kind != StatementKind::If && s.kind != StatementKind::Loop && s.kind != StatementKind::TryCatch) {
                for (const syntax::Declaration& d : syntax::find_declarations(tokens)) {
                    const std::size_t eq = d.name_index + 1;
                    if (eq < tokens.size() && tokens[eq].is("=")) {
                        bindings.push_back({d.name, eq + 1, syntax::expression_end(tokens, eq + 1)});
                    }
                }
            }

            std::vector<std::pair<std::string, std::string>> new_taints;
            for (const Binding& b : bindings) {
                if (b.value_end <= b.value_begin) {
                    continue;
                }
                std::string source;
                const std::size_t lo = tokens[b.value_begin].offset;
                const std::size_t hi = tokens[b.value_end - 1].end();
                for (auto it = external_by_offset.lower_bound(lo); it != external_by_offset.end() && it->first < hi;
                     ++it) {
                    if (it->second->statement_index == index) {
                        source = it->second->callee;
                        break;
                    }
                }
                if (source.empty()) {
                    for (const std::string& id : syntax::plain_identifiers(tokens, b.value_begin, b.value_end)) {
                        if (auto t = tainted.find(id); t != tainted.end() && id != b.name) {
                            source = t->second;
                            break;
                        }
                    }
                }
                if (source.empty()) {
                    continue;
                }
                new_taints.emplace_back(b.name, source);

                const bool is_state = contract.find_state_var(b.name) != nullptr &&
                                      std::any_of(f->state_writes.begin(), f->state_writes.end(), [&](const StateWrite& w) {
                                          return w.statement_index == index && w.target == b.name;
                                      });
                if (!is_state || !matches_any(b.name, kCritical)) {
                    continue;
                }
                const bool guarded = std::any_of(flat.begin(), flat.end(), [&](const Statement* g) {
                    return (g->kind == StatementKind::Require || g->kind == StatementKind::If) &&
                           has_identifier(*g, b.name);
                });
                if (guarded || !reported.emplace(b.name, s.line).second) {
                    continue;
                }
                Warning w = make_warning(DetectorId::D5_external_dependency, Severity::Medium, contract, f->name,
                                         s.line,
                                         "External Dependency: critical parameter " + b.name +
                                             " is calculated from external call " + source +
                                             " without range validation");
                w.related_symbols = {b.name, source};
                w.related_nodes = {callable_node_id(contract, *f), state_node(contract, b.name),
                                   external_boundary_id(contract.name)};
                out.push_back(std::move(w));
            }
            for (auto& [name, source] : new_taints) {
                tainted.emplace(std::move(name), std::move(source));
            }
        }
    }
    return out;
}

std::vector<Warning> detect_supply_hooks(const ContractDef& contract)
{
    std::vector<Warning> out;
    for (const FunctionDef& f : contract.functions) {
        if (!contains_ci(f.name, "mint") && !contains_ci(f.name, "burn")) {
            continue;
        }
        std::vector<std::string> supply;
        for (const std::string& v : f.writes) {
            if (contains_ci(v, "supply")) {
                supply.push_back(v);
            }
        }
        if (supply.empty() || f.has_modifier()) {
            continue;
        }
        const std::vector<const Statement*> flat = f.flattened();
        const bool has_require = std::any_of(flat.begin(), flat.end(), [](const Statement* s) {
            return s->kind == StatementKind::Require;
        });
        if (has_require) {
            continue;
        }
        Warning w = make_warning(DetectorId::D6_supply_hooks, Severity::High, contract, f.name, f.line_span.first,
                                 "Supply Manipulation Hook: " + f.name + " changes " + join(supply, ", ") +
                                     " without access modifier or require check");
        w.related_symbols = supply;
        w.related_nodes.push_back(callable_node_id(contract, f));
        for (const std::string& v : supply) {
            w.related_nodes.push_back(state_node(contract, v));
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Warning> detect_complex_calculation(const ContractDef& contract, const KeywordConfig& cfg)
{
    std::vector<Warning> out;
    for (const FunctionDef* f : contract.callables()) {
        if (f->writes.size() < 2) {
            continue;
        }
        for (const Statement* s : f->flattened()) {
            const int operators = arithmetic_operator_count(*s);
            if (operators <= cfg.complexity_threshold) {
                continue;
            }
            Warning w = make_warning(DetectorId::D7_complex_calculation, Severity::Info, contract, f->name, s->line,
                                     "Complex Calculation Risk: statement with " + std::to_string(operators) +
                                         " arithmetic operations in " + f->name + ", which changes " +
                                         std::to_string(f->writes.size()) +
                                         " state variables; review the result manually");
            w.related_symbols.assign(f->writes.begin(), f->writes.end());
            w.related_nodes.push_back(callable_node_id(contract, *f));
            for (const std::string& v : f->writes) {
                w.related_nodes.push_back(state_node(contract, v));
            }
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<Warning> detect_unchecked_low_level(const ContractDef& contract)
{
    std::vector<Warning> out;
    for (const FunctionDef* f : contract.callables()) {
        const std::vector<FlatStatement> flat = flatten_with_context(*f);
        for (const CallSite& call : f->calls) {
            if (call.kind != CallKind::LowLevel || call.final_segment() == "transfer" ||
                call.statement_index >= flat.size()) {
                continue;
            }
            const FlatStatement& entry = flat[call.statement_index];
            const Statement& s = *entry.statement;
            const bool wrapped = s.kind == StatementKind::Require || s.kind == StatementKind::Assert ||
                                 s.kind == StatementKind::If;
            if (wrapped || entry.inside_try || result_assigned(s, call)) {
                continue;
            }
            Warning w = make_warning(DetectorId::D8_unchecked_low_level, Severity::High, contract, f->name, call.line,
                                     "Non-Deterministic State Recovery: result of low-level call " + call.callee +
                                         " is not checked; verify the logical validity of state reversions");
            w.related_symbols = {call.callee};
            w.related_nodes = {callable_node_id(contract, *f), external_boundary_id(contract.name)};
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<Warning> detect_naming_ambiguity(const ContractDef& contract, const KeywordConfig& cfg)
{
    struct Symbol
    {
        std::string name;
        int line;
        std::string node;
    };
    std::vector<Symbol> symbols;
    std::set<std::string> seen;
    auto add = [&](const std::string& name, int line, std::string node) {
        if (name.size() >= 4 && seen.insert(name).second) {
            symbols.push_back({name, line, std::move(node)});
        }
    };
    for (const StateVarDef& v : contract.state_vars) {
        add(v.name, v.line, state_node(contract, v.name));
    }
    for (const FunctionDef& f : contract.functions) {
        add(f.name, f.line_span.first, callable_node_id(contract, f));
    }
    for (const ModifierDef& m : contract.modifiers) {
        add(m.name, m.line_span.first, node_id(contract.name, NodeKind::Modifier, m.name));
    }
    std::sort(symbols.begin(), symbols.end(),
              [](const Symbol& a, const Symbol& b) { return std::tie(a.line, a.name) < std::tie(b.line, b.name); });

    auto strip_underscores = [](std::string_view s) {
        while (!s.empty() && s.front() == '_') {
            s.remove_prefix(1);
        }
        return s;
    };

    std::vector<Warning> out;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        for (std::size_t j = i + 1; j < symbols.size(); ++j) {
            const Symbol& a = symbols[i];
            const Symbol& b = symbols[j];
            Severity severity;
            const std::string_view bare_a = strip_underscores(a.name);
            const std::string_view bare_b = strip_underscores(b.name);
            if (bare_a == bare_b) {
                severity = Severity::Info;
            } else {
                const std::string la = syntax::to_lower(a.name);
                const std::string lb = syntax::to_lower(b.name);
                if (la[0] != lb[0] || edit_distance(la, lb) > cfg.similarity_threshold) {
                    continue;
                }
                severity = Severity::Medium;
            }
            Warning w = make_warning(DetectorId::D9_naming_ambiguity, severity, contract, std::nullopt, b.line,
                                     "Naming Ambiguity: '" + a.name + "' and '" + b.name +
                                         "' are similar enough to be confused");
            w.related_symbols = {a.name, b.name};
            w.related_nodes = {a.node, b.node};
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<Warning> detect_legacy_signature_mismatch(const SourceUnit& current, const SourceUnit& baseline,
                                                      const KeywordConfig& cfg)
{
    std::vector<std::pair<const ContractDef*, const ContractDef*>> pairs;
    for (const ContractDef& c : current.contracts) {
        if (const ContractDef* b = baseline.find_contract(c.name)) {
            pairs.emplace_back(&c, b);
        }
    }
    if (pairs.empty() && current.contracts.size() == 1 && baseline.contracts.size() == 1) {
        pairs.emplace_back(&current.contracts.front(), &baseline.contracts.front());
    }

    std::vector<Warning> out;
    for (const auto& [cur, base] : pairs) {
        std::map<std::string, std::vector<const FunctionDef*>> cur_by_name;
        std::map<std::string, std::vector<const FunctionDef*>> base_by_name;
        for (const FunctionDef& f : cur->functions) {
            cur_by_name[f.name].push_back(&f);
        }
        for (const FunctionDef& f : base->functions) {
            base_by_name[f.name].push_back(&f);
        }
        for (const auto& [name, base_fns] : base_by_name) {
            auto it = cur_by_name.find(name);
            if (it == cur_by_name.end()) {
                if (!matches_any(name, cfg.exit_names) && !matches_any(name, cfg.stake_names) &&
                    !matches_any(name, cfg.unstake_names)) {
                    continue;
                }
                Warning w = make_warning(DetectorId::D10_legacy_signature, Severity::High, *cur, name,
                                         cur->line_span.first,
                                         "Legacy Signature Mismatch: removed financial function " +
                                             signature_of(*base_fns.front()) + " present in the baseline");
                w.related_symbols = {name};
                w.related_nodes = {node_id(cur->name, NodeKind::Contract, cur->name)};
                out.push_back(std::move(w));
                continue;
            }
            std::vector<std::string> base_sigs;
            std::vector<std::string> cur_sigs;
            for (const FunctionDef* f : base_fns) {
                base_sigs.push_back(signature_of(*f));
            }
            for (const FunctionDef* f : it->second) {
                cur_sigs.push_back(signature_of(*f));
            }
            std::sort(base_sigs.begin(), base_sigs.end());
            std::sort(cur_sigs.begin(), cur_sigs.end());
            if (base_sigs == cur_sigs) {
                continue;
            }
            const FunctionDef& first = *it->second.front();
            Warning w = make_warning(DetectorId::D10_legacy_signature, Severity::Medium, *cur, name,
                                     first.line_span.first,
                                     "Legacy Signature Mismatch: " + join(cur_sigs, " | ") + " differs from baseline " +
                                         join(base_sigs, " | "));
            w.related_symbols = {name};
            for (const FunctionDef* f : it->second) {
                w.related_nodes.push_back(callable_node_id(*cur, *f));
            }
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::set<DetectorId> parse_detector_ids(const std::vector<std::string>& names)
{
    std::set<DetectorId> out;
    for (const std::string& name : names) {
        const auto id = detector_from_string(name);
        if (!id) {
            throw ConfigError("unknown detector id '" + name + "'");
        }
        out.insert(*id);
    }
    return out;
}

bool warning_less(const Warning& a, const Warning& b)
{
    const std::string fa = a.function.value_or("");
    const std::string fb = b.function.value_or("");
    return std::tie(a.contract, a.line, a.detector, fa, a.message) <
           std::tie(b.contract, b.line, b.detector, fb, b.message);
}

std::vector<Warning> run_all(const SourceUnit& unit, const KeywordConfig& cfg, const SourceUnit* baseline,
                             const std::set<DetectorId>& enabled)
{
    validate(cfg);
    std::vector<Warning> all;
    auto take = [&](DetectorId id, std::vector<Warning> found) {
        if (enabled.contains(id)) {
            std::move(found.begin(), found.end(), std::back_inserter(all));
        }
    };
    for (const ContractDef& c : unit.contracts) {
        if (enabled.contains(DetectorId::D1_stake_asymmetry)) {
            take(DetectorId::D1_stake_asymmetry, detect_stake_asymmetry(c, cfg, PairKind::Stake));
        }
        if (enabled.contains(DetectorId::D2_missing_exit_validation)) {
            take(DetectorId::D2_missing_exit_validation, detect_missing_exit_validation(c, cfg));
        }
        if (enabled.contains(DetectorId::D3_unprotected_entry)) {
            take(DetectorId::D3_unprotected_entry, detect_unprotected_entry(unit, c));
        }
        if (enabled.contains(DetectorId::D4_price_lag)) {
            take(DetectorId::D4_price_lag, detect_price_lag(c, cfg));
        }
        if (enabled.contains(DetectorId::D5_external_dependency)) {
            take(DetectorId::D5_external_dependency, detect_external_dependency(c));
        }
        if (enabled.contains(DetectorId::D6_supply_hooks)) {
            take(DetectorId::D6_supply_hooks, detect_supply_hooks(c));
        }
        if (enabled.contains(DetectorId::D7_complex_calculation)) {
            take(DetectorId::D7_complex_calculation, detect_complex_calculation(c, cfg));
        }
        if (enabled.contains(DetectorId::D8_unchecked_low_level)) {
            take(DetectorId::D8_unchecked_low_level, detect_unchecked_low_level(c));
        }
        if (enabled.contains(DetectorId::D9_naming_ambiguity)) {
            take(DetectorId::D9_naming_ambiguity, detect_naming_ambiguity(c, cfg));
        }
        if (enabled.contains(DetectorId::D11_collateral_logic)) {
            take(DetectorId::D11_collateral_logic, detect_stake_asymmetry(c, cfg, PairKind::Collateral));
        }
        if (enabled.contains(DetectorId::D12_point_system)) {
            take(DetectorId::D12_point_system, detect_stake_asymmetry(c, cfg, PairKind::Points));
        }
    }
    if (baseline != nullptr && enabled.contains(DetectorId::D10_legacy_signature)) {
        take(DetectorId::D10_legacy_signature, detect_legacy_signature_mismatch(unit, *baseline, cfg));
    }

    std::map<std::string, DependencyGraph> graphs;
    for (const ContractDef& c : unit.contracts) {
        graphs.emplace(c.name, build_graph(c));
    }
    for (Warning& w : all) {
        const auto it = graphs.find(w.contract);
        std::vector<std::string> kept;
        for (std::string& id : w.related_nodes) {
            if (it != graphs.end() && it->second.has_node(id)) {
                push_unique(kept, std::move(id));
            }
        }
        w.related_nodes = std::move(kept);
    }
    std::stable_sort(all.begin(), all.end(), warning_less);
    return all;
}

}  // namespace smartgraph
