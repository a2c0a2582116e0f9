#include "smartgraph/frontend.hpp"

#include "syntax.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <utility>

namespace smartgraph {

namespace {

// Token text for diagnostics: whitespace collapsed, control bytes as \xNN, capped length.
std::string snippet(std::string_view text)
{
    static constexpr char kHex[] = "0123456789abcdef";
    static constexpr std::size_t kMaxLength = 40;
    std::string out;
    bool space = false;
    for (const char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            space = !out.empty();
            continue;
        }
        if (space) {
            out += ' ';
            space = false;
        }
        if (c < 0x20 || c == 0x7f) {
            out += "\\x";
            out += kHex[c >> 4];
            out += kHex[c & 0xf];
        } else {
            out += ch;
        }
    }
    if (out.size() > kMaxLength) {
        std::size_t cut = kMaxLength;
        while (cut > 0 && (static_cast<unsigned char>(out[cut]) & 0xc0) == 0x80) {
            --cut;
        }
        out = out.substr(0, cut) + "...";
    }
    return out;
}

// Copy of `text` with every byte that is not part of a well-formed UTF-8
// sequence replaced by U+FFFD. Newlines are never touched, so lines are kept.
std::string replace_invalid_utf8(std::string_view text, std::size_t& replaced)
{
    std::string out;
    out.reserve(text.size());
    replaced = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        const auto c = static_cast<unsigned char>(text[i]);
        std::size_t len = 0;
        unsigned lo = 0x80;
        unsigned hi = 0xbf;
        if (c < 0x80) {
            len = 1;
        } else if (c >= 0xc2 && c <= 0xdf) {
            len = 2;
        } else if (c >= 0xe0 && c <= 0xef) {
            len = 3;
            lo = c == 0xe0 ? 0xa0 : 0x80;
            hi = c == 0xed ? 0x9f : 0xbf;
        } else if (c >= 0xf0 && c <= 0xf4) {
            len = 4;
            lo = c == 0xf0 ? 0x90 : 0x80;
            hi = c == 0xf4 ? 0x8f : 0xbf;
        }
        bool ok = len > 0 && i + len <= text.size();
        for (std::size_t k = 1; ok && k < len; ++k) {
            const auto b = static_cast<unsigned char>(text[i + k]);
            ok = k == 1 ? (b >= lo && b <= hi) : (b >= 0x80 && b <= 0xbf);
        }
        if (ok) {
            out.append(text.substr(i, len));
            i += len;
        } else {
            out += "\xef\xbf\xbd";
            ++replaced;
            ++i;
        }
    }
    return out;
}

using syntax::npos;

constexpr std::size_t kMaxUnknownCharDiagnostics = 16;

enum class HeadKind { Function, Constructor, Special };

bool is_visibility(std::string_view word)
{
    return word == "public" || word == "external" || word == "internal" || word == "private";
}

Visibility visibility_from(std::string_view word)
{
    if (word == "public") {
        return Visibility::Public;
    }
    if (word == "external") {
        return Visibility::External;
    }
    if (word == "internal") {
        return Visibility::Internal;
    }
    if (word == "private") {
        return Visibility::Private;
    }
    return Visibility::Default;
}

bool is_contract_keyword(std::string_view word)
{
    return word == "contract" || word == "interface" || word == "library";
}

ContractKind contract_kind_from(std::string_view word)
{
    if (word == "interface") {
        return ContractKind::Interface;
    }
    if (word == "library") {
        return ContractKind::Library;
    }
    return ContractKind::Contract;
}

bool is_state_var_attribute(std::string_view word)
{
    return is_visibility(word) || word == "constant" || word == "immutable" || word == "override" ||
           word == "transient";
}

std::string_view trim(std::string_view text)
{
    const auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; };
    while (!text.empty() && is_ws(text.front())) {
        text.remove_prefix(1);
    }
    while (!text.empty() && is_ws(text.back())) {
        text.remove_suffix(1);
    }
    return text;
}

class Parser
{
public:
    Parser(std::string_view source, std::string_view path)
        : owned_(replace_invalid_utf8(source, invalid_bytes_))
        , source_(owned_)
    {
        unit_.path = std::string(path);
    }

    SourceUnit run()
    {
        if (invalid_bytes_ > 0) {
            diag(first_line_with_replacement(), DiagnosticSeverity::Warning,
                 std::to_string(invalid_bytes_) + " bytes of invalid UTF-8 replaced");
        }
        const StrippedSource stripped = strip_noise_detailed(source_);
        if (stripped.unterminated_comment_line != 0) {
            diag(stripped.unterminated_comment_line, DiagnosticSeverity::Warning,
                 "unterminated block comment; remainder of file ignored");
        }
        if (stripped.unterminated_string_line != 0) {
            diag(stripped.unterminated_string_line, DiagnosticSeverity::Warning, "unterminated string literal");
        }
        tokens_ = tokenize(stripped.text);
        build_match_table();
        report_unknown_characters();
        parse_top_level();
        report_unbalanced_braces();
        annotate_calls();
        return std::move(unit_);
    }

private:
    // ---- token helpers ----------------------------------------------------

    [[nodiscard]] bool at(std::size_t i, std::string_view spelling) const
    {
        return i < tokens_.size() && tokens_[i].text == spelling && tokens_[i].kind != TokenKind::String;
    }

    [[nodiscard]] bool ident_at(std::size_t i) const
    {
        return i < tokens_.size() && tokens_[i].is_identifier();
    }

    [[nodiscard]] int line_of(std::size_t i) const
    {
        if (tokens_.empty()) {
            return 1;
        }
        return tokens_[std::min(i, tokens_.size() - 1)].line;
    }

    /// Matching closer of tokens_[open] if it lies before `limit`, else npos.
    [[nodiscard]] std::size_t match(std::size_t open, std::size_t limit) const
    {
        if (open >= match_.size()) {
            return npos;
        }
        const std::size_t m = match_[open];
        return (m == npos || m >= limit) ? npos : m;
    }

    [[nodiscard]] std::string original(std::size_t first, std::size_t last) const
    {
        if (first >= tokens_.size() || last < first) {
            return {};
        }
        last = std::min(last, tokens_.size() - 1);
        const std::size_t begin = tokens_[first].offset;
        const std::size_t end = tokens_[last].end();
        return std::string(trim(source_.substr(begin, end - begin)));
    }

    [[nodiscard]] std::string original_inner(std::size_t open, std::size_t close) const
    {
        if (close <= open + 1) {
            return {};
        }
        return original(open + 1, close - 1);
    }

    void diag(int line, DiagnosticSeverity severity, std::string message)
    {
        unit_.diagnostics.push_back(ParseDiagnostic{line, severity, std::move(message)});
    }

    // Safety net for recovery paths that skip text without reporting it.
    void report_unbalanced_braces()
    {
        if (unit_.has_errors()) {
            return;
        }
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < tokens_.size(); ++i) {
            if (at(i, "{")) {
                open.push_back(i);
            } else if (at(i, "}")) {
                if (open.empty()) {
                    diag(tokens_[i].line, DiagnosticSeverity::Error, "unmatched '}'");
                    return;
                }
                open.pop_back();
            }
        }
        if (!open.empty()) {
            diag(tokens_[open.front()].line, DiagnosticSeverity::Error, "unclosed '{'");
        }
    }

    void build_match_table()
    {
        match_.assign(tokens_.size(), npos);
        std::vector<std::size_t> parens;
        std::vector<std::size_t> brackets;
        std::vector<std::size_t> braces;
        for (std::size_t i = 0; i < tokens_.size(); ++i) {
            const Token& t = tokens_[i];
            if (t.kind != TokenKind::Punct || t.text.size() != 1) {
                continue;
            }
            auto close_with = [&](std::vector<std::size_t>& stack) {
                if (!stack.empty()) {
                    match_[stack.back()] = i;
                    stack.pop_back();
                }
            };
            switch (t.text[0]) {
            case '(':
                parens.push_back(i);
                break;
            case '[':
                brackets.push_back(i);
                break;
            case '{':
                braces.push_back(i);
                break;
            case ')':
                close_with(parens);
                break;
            case ']':
                close_with(brackets);
                break;
            case '}':
                close_with(braces);
                break;
            default:
                break;
            }
        }
    }

    void report_unknown_characters()
    {
        std::size_t reported = 0;
        std::size_t total = 0;
        for (const Token& t : tokens_) {
            if (t.kind != TokenKind::Unknown) {
                continue;
            }
            ++total;
            if (reported < kMaxUnknownCharDiagnostics) {
                diag(t.line, DiagnosticSeverity::Warning, "unexpected character in source");
                ++reported;
            }
        }
        if (total > reported) {
            diag(line_of(tokens_.size()), DiagnosticSeverity::Warning,
                 std::to_string(total - reported) + " further unexpected characters not reported");
        }
    }

    /// Index after the next ';' or brace-balanced block, bounded by `end`.
    [[nodiscard]] std::size_t skip_declaration(std::size_t pos, std::size_t end) const
    {
        for (std::size_t j = pos; j < end; ++j) {
            if (at(j, ";")) {
                return j + 1;
            }
            if (at(j, "{")) {
                const std::size_t m = match(j, end);
                return m == npos ? end : m + 1;
            }
        }
        return end;
    }

    /// Index of the ';' ending the construct at `pos`, skipping bracket groups; npos if absent.
    [[nodiscard]] std::size_t scan_to_semicolon(std::size_t pos, std::size_t end, bool allow_braces) const
    {
        std::size_t j = pos;
        while (j < end) {
            if (at(j, ";")) {
                return j;
            }
            if (at(j, "{") && !allow_braces) {
                return npos;
            }
            if (syntax::is_open_bracket(tokens_[j])) {
                const std::size_t m = match(j, end);
                if (m == npos) {
                    return npos;
                }
                j = m + 1;
                continue;
            }
            ++j;
        }
        return npos;
    }

    // ---- top level --------------------------------------------------------

    void parse_top_level()
    {
        std::size_t pos = 0;
        const std::size_t n = tokens_.size();
        while (pos < n) {
            const Token& t = tokens_[pos];
            if (at(pos, "pragma")) {
                pos = parse_pragma(pos);
            } else if (at(pos, "import")) {
                pos = parse_import(pos);
            } else if ((at(pos, "abstract") && pos + 1 < n && is_contract_keyword(tokens_[pos + 1].text)) ||
                       (t.is_identifier() && is_contract_keyword(t.text) && ident_at(pos + 1))) {
                pos = parse_contract(pos);
            } else if (at(pos, "struct") || at(pos, "enum") || at(pos, "function") || at(pos, "error") ||
                       at(pos, "event") || at(pos, "using") || at(pos, "type")) {
                if ((at(pos, "enum") || at(pos, "type")) && ident_at(pos + 1)) {
                    type_names_.insert(tokens_[pos + 1].text);
                }
                pos = skip_declaration(pos, n);
            } else if (t.is_identifier() && scan_to_semicolon(pos, n, false) != npos) {
                // File-level constant or other declaration ending in ';'.
                pos = scan_to_semicolon(pos, n, false) + 1;
            } else if (at(pos, ";")) {
                ++pos;
            } else if (at(pos, "}")) {
                diag(t.line, DiagnosticSeverity::Error, "unmatched '}' at top level");
                ++pos;
            } else {
                diag(t.line, DiagnosticSeverity::Error, "unexpected '" + snippet(t.text) + "' at top level");
                pos = recover_top_level(pos + 1);
            }
        }
    }

    [[nodiscard]] std::size_t recover_top_level(std::size_t pos) const
    {
        const std::size_t n = tokens_.size();
        for (std::size_t j = pos; j < n; ++j) {
            if (at(j, ";")) {
                return j + 1;
            }
            if (at(j, "}")) {
                return j;
            }
            if (at(j, "{")) {
                const std::size_t m = match(j, n);
                return m == npos ? n : m + 1;
            }
            if (tokens_[j].is_identifier() && (is_contract_keyword(tokens_[j].text) || tokens_[j].is("pragma") ||
                                               tokens_[j].is("import"))) {
                return j;
            }
        }
        return n;
    }

    std::size_t parse_pragma(std::size_t pos)
    {
        const std::size_t n = tokens_.size();
        std::size_t semi = pos + 1;
        while (semi < n && !at(semi, ";")) {
            ++semi;
        }
        if (semi >= n) {
            diag(tokens_[pos].line, DiagnosticSeverity::Error, "pragma directive missing ';'");
        }
        const std::size_t last = semi >= n ? n - 1 : semi - 1;
        if (last > pos) {
            const std::size_t first = at(pos + 1, "solidity") && pos + 2 <= last ? pos + 2 : pos + 1;
            unit_.pragmas.push_back(original(first, last));
        }
        return semi >= n ? n : semi + 1;
    }

    std::size_t parse_import(std::size_t pos)
    {
        const std::size_t n = tokens_.size();
        std::size_t semi = pos + 1;
        std::size_t last_string = npos;
        while (semi < n && !at(semi, ";")) {
            if (tokens_[semi].kind == TokenKind::String) {
                last_string = semi;
            }
            ++semi;
        }
        if (semi >= n) {
            diag(tokens_[pos].line, DiagnosticSeverity::Error, "import directive missing ';'");
        }
        if (last_string == npos) {
            diag(tokens_[pos].line, DiagnosticSeverity::Warning, "import directive without a path");
        } else {
            const Token& s = tokens_[last_string];
            const std::size_t inner = s.length >= 2 ? s.length - 2 : 0;
            unit_.imports.push_back(ImportRef{std::string(source_.substr(s.offset + 1, inner)), s.line});
        }
        return semi >= n ? n : semi + 1;
    }

    std::size_t parse_contract(std::size_t pos)
    {
        const std::size_t n = tokens_.size();
        ContractDef contract;
        std::size_t kw = pos;
        if (at(pos, "abstract")) {
            contract.is_abstract = true;
            kw = pos + 1;
        }
        contract.kind = contract_kind_from(tokens_[kw].text);
        contract.name = tokens_[kw + 1].text;
        type_names_.insert(contract.name);

        std::size_t i = kw + 2;
        if (at(i, "is")) {
            ++i;
            bool expect_name = true;
            while (i < n && !at(i, "{") && !at(i, ";")) {
                if (at(i, "(")) {
                    const std::size_t m = match(i, n);
                    i = m == npos ? n : m + 1;
                    continue;
                }
                if (at(i, ",")) {
                    expect_name = true;
                } else if (expect_name && ident_at(i)) {
                    std::string parent = tokens_[i].text;
                    while (at(i + 1, ".") && ident_at(i + 2)) {
                        parent = tokens_[i + 2].text;
                        i += 2;
                    }
                    contract.inherits.push_back(parent);
                    expect_name = false;
                }
                ++i;
            }
        }
        if (!at(i, "{")) {
            diag(line_of(i), DiagnosticSeverity::Error, "expected '{' after declaration of '" + contract.name + "'");
            return recover_top_level(i);
        }

        const std::size_t close = match(i, n);
        const bool terminated = close != npos;
        std::size_t end = terminated ? close : n;
        if (!terminated) {
            diag(tokens_[i].line, DiagnosticSeverity::Error, "unterminated body of '" + contract.name + "'");
        }
        const std::size_t stop = parse_members(contract, i + 1, end, terminated);
        std::size_t resume = terminated ? close + 1 : n;
        if (!terminated && stop < end) {
            end = stop;
            resume = stop;
        }
        contract.line_span = {tokens_[pos].line, terminated ? tokens_[close].line : line_of(end - 1)};

        const bool duplicate = std::any_of(unit_.contracts.begin(), unit_.contracts.end(), [&](const ContractDef& c) {
            return c.name == contract.name && c.kind == contract.kind;
        });
        if (duplicate) {
            diag(tokens_[pos].line, DiagnosticSeverity::Error,
                 "duplicate declaration of " + std::string(to_string(contract.kind)) + " '" + contract.name + "'");
        } else {
            unit_.contracts.push_back(std::move(contract));
        }
        return resume;
    }

    /// Parses members in [begin, end). Returns the index where parsing stopped early
    /// (a nested contract keyword inside an unterminated body), or `end`.
    std::size_t parse_members(ContractDef& contract, std::size_t begin, std::size_t end, bool terminated)
    {
        std::size_t p = begin;
        while (p < end) {
            const Token& t = tokens_[p];
            const bool nested_contract = (t.is_identifier() && is_contract_keyword(t.text) && ident_at(p + 1)) ||
                                         (at(p, "abstract") && p + 1 < end && is_contract_keyword(tokens_[p + 1].text));
            if (nested_contract) {
                if (!terminated) {
                    return p;
                }
                diag(t.line, DiagnosticSeverity::Error, "nested contract declaration inside '" + contract.name + "'");
                p = skip_declaration(p, end);
            } else if (at(p, "function")) {
                p = parse_function(contract, p, end, HeadKind::Function);
            } else if (at(p, "constructor")) {
                p = parse_function(contract, p, end, HeadKind::Constructor);
            } else if ((at(p, "fallback") || at(p, "receive")) && at(p + 1, "(")) {
                p = parse_function(contract, p, end, HeadKind::Special);
            } else if (at(p, "modifier")) {
                p = parse_modifier(contract, p, end);
            } else if (at(p, "event")) {
                p = parse_event(contract, p, end);
            } else if (at(p, "struct")) {
                p = parse_struct(contract, p, end);
            } else if (at(p, "enum") || at(p, "error") || at(p, "using") || at(p, "type")) {
                if ((at(p, "enum") || at(p, "type")) && ident_at(p + 1)) {
                    type_names_.insert(tokens_[p + 1].text);
                }
                p = skip_declaration(p, end);
            } else if (at(p, ";")) {
                diag(t.line, DiagnosticSeverity::Warning, "stray ';' in body of '" + contract.name + "'");
                ++p;
            } else if (t.is_identifier()) {
                p = parse_state_var(contract, p, end);
            } else {
                diag(t.line, DiagnosticSeverity::Error,
                     "unexpected '" + snippet(t.text) + "' in body of '" + contract.name + "'");
                p = skip_declaration(p + 1, end);
            }
        }
        return end;
    }

    ParamDef parse_param_chunk(std::size_t begin, std::size_t end) const
    {
        std::vector<Token> kept;
        for (std::size_t i = begin; i < end; ++i) {
            const Token& t = tokens_[i];
            if (t.is_identifier() && (syntax::is_storage_location(t.text) || t.is("indexed"))) {
                continue;
            }
            kept.push_back(t);
        }
        ParamDef param;
        const bool named = kept.size() >= 2 && kept.back().is_identifier() && !kept.back().is("payable") &&
                           !kept[kept.size() - 2].is(".");
        if (named) {
            param.name = kept.back().text;
            kept.pop_back();
        }
        param.type_name = syntax::join_tokens(kept, 0, kept.size());
        return param;
    }

    std::vector<ParamDef> parse_params(std::size_t open, std::size_t close) const
    {
        std::vector<ParamDef> params;
        if (close == npos || close <= open + 1) {
            return params;
        }
        std::size_t start = open + 1;
        int depth = 0;
        for (std::size_t i = open + 1; i <= close; ++i) {
            if (i < close && syntax::is_open_bracket(tokens_[i])) {
                ++depth;
            } else if (i < close && syntax::is_close_bracket(tokens_[i])) {
                --depth;
            }
            if (i == close || (depth == 0 && at(i, ","))) {
                if (i > start) {
                    params.push_back(parse_param_chunk(start, i));
                }
                start = i + 1;
            }
        }
        return params;
    }

    std::size_t parse_function(ContractDef& contract, std::size_t p, std::size_t end, HeadKind head)
    {
        FunctionDef function;
        const int start_line = tokens_[p].line;
        std::size_t i = p + 1;
        switch (head) {
        case HeadKind::Function:
            if (ident_at(i)) {
                function.name = tokens_[i].text;
                ++i;
            } else {
                function.name = "fallback";
            }
            break;
        case HeadKind::Constructor:
            function.name = "constructor";
            break;
        case HeadKind::Special:
            function.name = tokens_[p].text;
            break;
        }

        if (!at(i, "(")) {
            diag(line_of(i), DiagnosticSeverity::Error, "expected '(' in header of function '" + function.name + "'");
            return skip_declaration(i, end);
        }
        const std::size_t params_close = match(i, end);
        if (params_close == npos) {
            diag(tokens_[i].line, DiagnosticSeverity::Error,
                 "unterminated parameter list of function '" + function.name + "'");
            return end;
        }
        function.params = parse_params(i, params_close);
        i = params_close + 1;

        while (i < end && !at(i, "{") && !at(i, ";")) {
            const Token& t = tokens_[i];
            if (t.is_identifier() && is_visibility(t.text)) {
                function.visibility = visibility_from(t.text);
                ++i;
            } else if (at(i, "view") || at(i, "constant")) {
                function.mutability = Mutability::View;
                ++i;
            } else if (at(i, "pure")) {
                function.mutability = Mutability::Pure;
                ++i;
            } else if (at(i, "payable")) {
                function.mutability = Mutability::Payable;
                ++i;
            } else if (at(i, "nonpayable") || at(i, "virtual")) {
                ++i;
            } else if (at(i, "override")) {
                ++i;
                if (at(i, "(")) {
                    const std::size_t m = match(i, end);
                    i = m == npos ? end : m + 1;
                }
            } else if (at(i, "returns")) {
                ++i;
                if (at(i, "(")) {
                    const std::size_t m = match(i, end);
                    function.returns = parse_params(i, m);
                    i = m == npos ? end : m + 1;
                }
            } else if (t.is_identifier()) {
                ModifierRef ref{t.text, {}};
                ++i;
                while (at(i, ".") && ident_at(i + 1)) {
                    ref.name = tokens_[i + 1].text;
                    i += 2;
                }
                if (at(i, "(")) {
                    const std::size_t m = match(i, end);
                    if (m != npos) {
                        ref.arguments = original_inner(i, m);
                    }
                    i = m == npos ? end : m + 1;
                }
                const bool base_constructor_call =
                    head == HeadKind::Constructor &&
                    std::find(contract.inherits.begin(), contract.inherits.end(), ref.name) != contract.inherits.end();
                if (!base_constructor_call) {
                    function.modifiers.push_back(std::move(ref));
                }
            } else {
                diag(t.line, DiagnosticSeverity::Warning,
                     "unexpected '" + snippet(t.text) + "' in header of function '" + function.name + "'");
                ++i;
            }
        }

        std::size_t next = end;
        if (i >= end) {
            diag(line_of(end - 1), DiagnosticSeverity::Error, "function '" + function.name + "' has no body or ';'");
            function.line_span = {start_line, line_of(end - 1)};
        } else if (at(i, ";")) {
            function.line_span = {start_line, tokens_[i].line};
            next = i + 1;
        } else {
            const std::size_t close = match(i, end);
            std::size_t body_end = end;
            if (close == npos) {
                diag(tokens_[i].line, DiagnosticSeverity::Error,
                     "unterminated body of function '" + function.name + "'");
            } else {
                body_end = close;
                next = close + 1;
            }
            function.body = parse_block(i + 1, body_end, 1);
            function.has_body = true;
            function.line_span = {start_line, close == npos ? line_of(end - 1) : tokens_[close].line};
            if (contract.kind == ContractKind::Interface) {
                diag(start_line, DiagnosticSeverity::Warning,
                     "interface function '" + function.name + "' has a body; body ignored");
                function.body.clear();
                function.has_body = false;
            }
        }

        if (head == HeadKind::Constructor) {
            if (contract.constructor) {
                diag(start_line, DiagnosticSeverity::Warning, "duplicate constructor in '" + contract.name + "'");
            } else {
                contract.constructor = std::move(function);
            }
        } else {
            contract.functions.push_back(std::move(function));
        }
        return next;
    }

    std::size_t parse_modifier(ContractDef& contract, std::size_t p, std::size_t end)
    {
        ModifierDef modifier;
        const int start_line = tokens_[p].line;
        std::size_t i = p + 1;
        if (!ident_at(i)) {
            diag(line_of(i), DiagnosticSeverity::Error, "expected modifier name");
            return skip_declaration(i, end);
        }
        modifier.name = tokens_[i].text;
        ++i;
        if (at(i, "(")) {
            const std::size_t m = match(i, end);
            modifier.params = parse_params(i, m);
            i = m == npos ? end : m + 1;
        }
        while (i < end && !at(i, "{") && !at(i, ";")) {
            if (at(i, "override") && at(i + 1, "(")) {
                const std::size_t m = match(i + 1, end);
                i = m == npos ? end : m + 1;
                continue;
            }
            if (!at(i, "virtual") && !at(i, "override")) {
                diag(tokens_[i].line, DiagnosticSeverity::Warning,
                     "unexpected '" + snippet(tokens_[i].text) + "' in header of modifier '" + modifier.name + "'");
            }
            ++i;
        }
        std::size_t next = end;
        if (i >= end) {
            diag(line_of(end - 1), DiagnosticSeverity::Error, "modifier '" + modifier.name + "' has no body");
            modifier.line_span = {start_line, line_of(end - 1)};
        } else if (at(i, ";")) {
            modifier.line_span = {start_line, tokens_[i].line};
            next = i + 1;
        } else {
            const std::size_t close = match(i, end);
            if (close == npos) {
                diag(tokens_[i].line, DiagnosticSeverity::Error,
                     "unterminated body of modifier '" + modifier.name + "'");
            } else {
                next = close + 1;
            }
            modifier.body = parse_block(i + 1, close == npos ? end : close, 1);
            modifier.line_span = {start_line, close == npos ? line_of(end - 1) : tokens_[close].line};
        }
        contract.modifiers.push_back(std::move(modifier));
        return next;
    }

    std::size_t parse_event(ContractDef& contract, std::size_t p, std::size_t end)
    {
        const std::size_t semi = scan_to_semicolon(p, end, false);
        if (!ident_at(p + 1) || !at(p + 2, "(") || semi == npos) {
            diag(tokens_[p].line, DiagnosticSeverity::Error, "malformed event declaration");
            return skip_declaration(p + 1, end);
        }
        EventDef event;
        event.name = tokens_[p + 1].text;
        event.line = tokens_[p].line;
        event.params = parse_params(p + 2, match(p + 2, end));
        contract.events.push_back(std::move(event));
        return semi + 1;
    }

    std::size_t parse_struct(ContractDef& contract, std::size_t p, std::size_t end)
    {
        if (!ident_at(p + 1) || !at(p + 2, "{")) {
            diag(tokens_[p].line, DiagnosticSeverity::Error, "malformed struct declaration");
            return skip_declaration(p + 1, end);
        }
        const std::size_t close = match(p + 2, end);
        if (close == npos) {
            diag(tokens_[p].line, DiagnosticSeverity::Error, "unterminated struct declaration");
            return end;
        }
        StructDef def;
        def.name = tokens_[p + 1].text;
        def.line = tokens_[p].line;
        type_names_.insert(def.name);
        std::size_t start = p + 3;
        for (std::size_t i = p + 3; i < close; ++i) {
            if (at(i, ";")) {
                if (i > start) {
                    def.fields.push_back(parse_param_chunk(start, i));
                }
                start = i + 1;
            }
        }
        contract.structs.push_back(std::move(def));
        return close + 1;
    }

    std::size_t parse_state_var(ContractDef& contract, std::size_t p, std::size_t end)
    {
        const std::size_t semi = scan_to_semicolon(p, end, false);
        if (semi == npos) {
            diag(tokens_[p].line, DiagnosticSeverity::Error,
                 "unrecognized member '" + snippet(tokens_[p].text) + "' in body of '" + contract.name + "'");
            return skip_declaration(p, end);
        }
        std::size_t decl_end = semi;
        for (std::size_t i = p; i < semi; ++i) {
            if (syntax::is_open_bracket(tokens_[i])) {
                const std::size_t m = match(i, semi);
                if (m == npos) {
                    break;
                }
                i = m;
                continue;
            }
            if (at(i, "=")) {
                decl_end = i;
                break;
            }
        }

        StateVarDef var;
        var.line = tokens_[p].line;
        std::size_t name_index = npos;
        std::size_t first_attribute = npos;
        for (std::size_t i = p; i < decl_end; ++i) {
            if (syntax::is_open_bracket(tokens_[i])) {
                const std::size_t m = match(i, decl_end);
                if (m == npos) {
                    break;
                }
                i = m;
                continue;
            }
            const Token& t = tokens_[i];
            if (!t.is_identifier()) {
                continue;
            }
            if (i > p && is_state_var_attribute(t.text)) {
                if (first_attribute == npos) {
                    first_attribute = i;
                }
                if (is_visibility(t.text)) {
                    var.visibility = visibility_from(t.text);
                } else if (t.is("constant")) {
                    var.is_constant = true;
                }
                continue;
            }
            if (i > p && !at(i - 1, ".")) {
                name_index = i;
            }
        }
        if (name_index == npos || !is_valid_identifier(tokens_[name_index].text)) {
            diag(tokens_[p].line, DiagnosticSeverity::Error,
                 "unrecognized member '" + original(p, semi) + "' in body of '" + contract.name + "'");
            return semi + 1;
        }
        var.name = tokens_[name_index].text;
        const std::size_t type_end = std::min(first_attribute, name_index);
        var.type_name = syntax::join_tokens(tokens_, p, type_end);
        contract.state_vars.push_back(std::move(var));
        return semi + 1;
    }

    // ---- statements -------------------------------------------------------

    Statement make_statement(StatementKind kind, std::size_t text_first, std::size_t text_last,
                             std::size_t tokens_begin, std::size_t tokens_end) const
    {
        Statement s;
        s.kind = kind;
        s.line = tokens_[text_first].line;
        s.text = original(text_first, text_last);
        tokens_end = std::min(tokens_end, tokens_.size());
        if (tokens_begin < tokens_end) {
            s.tokens.assign(tokens_.begin() + static_cast<std::ptrdiff_t>(tokens_begin),
                            tokens_.begin() + static_cast<std::ptrdiff_t>(tokens_end));
        }
        return s;
    }

    std::vector<Statement> parse_block(std::size_t begin, std::size_t end, int depth)
    {
        std::vector<Statement> out;
        std::size_t p = begin;
        while (p < end) {
            p = parse_statement(p, end, depth, out);
        }
        return out;
    }

    /// Parses one statement starting at p; always returns an index > p.
    std::size_t parse_statement(std::size_t p, std::size_t end, int depth, std::vector<Statement>& out)
    {
        if (depth > kMaxNestingDepth) {
            diag(tokens_[p].line, DiagnosticSeverity::Warning,
                 "statement nesting deeper than " + std::to_string(kMaxNestingDepth) + " summarized");
            out.push_back(make_statement(StatementKind::Other, p, end - 1, p, p + 1));
            return end;
        }

        if (at(p, "{") || (at(p, "unchecked") && at(p + 1, "{"))) {
            const std::size_t open = at(p, "{") ? p : p + 1;
            const std::size_t close = match(open, end);
            if (close == npos) {
                diag(tokens_[open].line, DiagnosticSeverity::Error, "unterminated block");
            }
            std::vector<Statement> inner = parse_block(open + 1, close == npos ? end : close, depth + 1);
            std::move(inner.begin(), inner.end(), std::back_inserter(out));
            return close == npos ? end : close + 1;
        }
        if (at(p, ";")) {
            return p + 1;
        }
        if (at(p, "if") && at(p + 1, "(")) {
            return parse_if(p, end, depth, out);
        }
        if ((at(p, "for") || at(p, "while")) && at(p + 1, "(")) {
            return parse_loop(p, end, depth, out);
        }
        if (at(p, "do")) {
            return parse_do_while(p, end, depth, out);
        }
        if (at(p, "try")) {
            return parse_try(p, end, depth, out);
        }
        if (at(p, "assembly")) {
            return parse_assembly(p, end, out);
        }
        return parse_simple(p, end, out);
    }

    std::size_t parse_if(std::size_t p, std::size_t end, int depth, std::vector<Statement>& out)
    {
        const std::size_t cond_close = match(p + 1, end);
        if (cond_close == npos) {
            return parse_simple(p, end, out);
        }
        Statement s = make_statement(StatementKind::If, p, cond_close, p, cond_close + 1);
        std::size_t i = cond_close + 1;
        if (i < end) {
            i = parse_statement(i, end, depth + 1, s.children);
        } else {
            diag(tokens_[p].line, DiagnosticSeverity::Error, "if statement without body");
        }
        if (i < end && at(i, "else")) {
            ++i;
            if (i < end) {
                i = parse_statement(i, end, depth + 1, s.children);
            }
        }
        out.push_back(std::move(s));
        return i;
    }

    std::size_t parse_loop(std::size_t p, std::size_t end, int depth, std::vector<Statement>& out)
    {
        const std::size_t header_close = match(p + 1, end);
        if (header_close == npos) {
            return parse_simple(p, end, out);
        }
        Statement s = make_statement(StatementKind::Loop, p, header_close, p, header_close + 1);
        std::size_t i = header_close + 1;
        if (i < end) {
            i = parse_statement(i, end, depth + 1, s.children);
        } else {
            diag(tokens_[p].line, DiagnosticSeverity::Error, "loop without body");
        }
        out.push_back(std::move(s));
        return i;
    }

    std::size_t parse_do_while(std::size_t p, std::size_t end, int depth, std::vector<Statement>& out)
    {
        std::vector<Statement> body;
        std::size_t i = p + 1 < end ? parse_statement(p + 1, end, depth + 1, body) : end;
        if (!at(i, "while") || !at(i + 1, "(") || match(i + 1, end) == npos) {
            diag(tokens_[p].line, DiagnosticSeverity::Error, "do statement without while condition");
            Statement s = make_statement(StatementKind::Loop, p, p, p, p + 1);
            s.children = std::move(body);
            out.push_back(std::move(s));
            return std::max(i, p + 1);
        }
        const std::size_t cond_close = match(i + 1, end);
        Statement s = make_statement(StatementKind::Loop, i, cond_close, i, cond_close + 1);
        s.text = "do " + s.text;
        s.line = tokens_[p].line;
        s.children = std::move(body);
        out.push_back(std::move(s));
        std::size_t next = cond_close + 1;
        if (at(next, ";")) {
            ++next;
        }
        return next;
    }

    std::size_t parse_try(std::size_t p, std::size_t end, int depth, std::vector<Statement>& out)
    {
        std::size_t open = npos;
        for (std::size_t j = p + 1; j < end; ++j) {
            if (at(j, "{")) {
                open = j;
                break;
            }
            if (at(j, "(")) {
                const std::size_t m = match(j, end);
                if (m == npos) {
                    break;
                }
                j = m;
            } else if (at(j, ";")) {
                break;
            }
        }
        const std::size_t close = open == npos ? npos : match(open, end);
        if (close == npos) {
            return parse_simple(p, end, out);
        }
        Statement s = make_statement(StatementKind::TryCatch, p, open - 1, p, open);
        s.children = parse_block(open + 1, close, depth + 1);
        std::size_t i = close + 1;
        while (i < end && at(i, "catch")) {
            std::size_t catch_open = npos;
            for (std::size_t j = i + 1; j < end; ++j) {
                if (at(j, "{")) {
                    catch_open = j;
                    break;
                }
            }
            const std::size_t catch_close = catch_open == npos ? npos : match(catch_open, end);
            if (catch_close == npos) {
                diag(tokens_[i].line, DiagnosticSeverity::Error, "malformed catch clause");
                i = end;
                break;
            }
            std::vector<Statement> handler = parse_block(catch_open + 1, catch_close, depth + 1);
            std::move(handler.begin(), handler.end(), std::back_inserter(s.children));
            i = catch_close + 1;
        }
        out.push_back(std::move(s));
        return i;
    }

    std::size_t parse_assembly(std::size_t p, std::size_t end, std::vector<Statement>& out)
    {
        std::size_t i = p + 1;
        if (i < end && tokens_[i].kind == TokenKind::String) {
            ++i;
        }
        if (at(i, "(")) {
            const std::size_t m = match(i, end);
            i = m == npos ? i + 1 : m + 1;
        }
        std::size_t next = i;
        std::size_t last = p;
        if (at(i, "{")) {
            const std::size_t close = match(i, end);
            last = close == npos ? end - 1 : close;
            next = close == npos ? end : close + 1;
        }
        diag(tokens_[p].line, DiagnosticSeverity::Warning, "inline assembly summarized as a single statement");
        out.push_back(make_statement(StatementKind::Other, p, last, p, p + 1));
        return std::max(next, p + 1);
    }

    std::size_t parse_simple(std::size_t p, std::size_t end, std::vector<Statement>& out)
    {
        std::size_t semi = scan_to_semicolon(p, end, true);
        std::size_t stop = semi;
        std::size_t next = semi + 1;
        if (semi == npos) {
            diag(tokens_[p].line, DiagnosticSeverity::Error, "statement missing ';'");
            stop = end;
            next = end;
        }
        const std::size_t text_last = semi == npos ? end - 1 : semi;
        Statement s = make_statement(classify_simple(p, stop), p, text_last, p, stop);
        if (s.kind == StatementKind::Emit) {
            for (std::size_t j = p + 1; j < stop; ++j) {
                if (at(j, "(")) {
                    break;
                }
                if (ident_at(j)) {
                    s.emitted_event = tokens_[j].text;
                }
            }
        }
        out.push_back(std::move(s));
        return next;
    }

    [[nodiscard]] StatementKind classify_simple(std::size_t p, std::size_t stop) const
    {
        const bool call_form = at(p + 1, "(");
        if (at(p, "require") && call_form) {
            return StatementKind::Require;
        }
        if (at(p, "assert") && call_form) {
            return StatementKind::Assert;
        }
        if (at(p, "revert") || at(p, "throw")) {
            return StatementKind::Revert;
        }
        if (at(p, "emit")) {
            return StatementKind::Emit;
        }
        if (at(p, "return")) {
            return StatementKind::Return;
        }
        if (at(p, "delete")) {
            return StatementKind::Assignment;
        }
        int depth = 0;
        bool has_call = false;
        for (std::size_t i = p; i < stop; ++i) {
            const Token& t = tokens_[i];
            if (syntax::is_open_bracket(t)) {
                if (t.is("(") && i > p &&
                    (tokens_[i - 1].is_identifier() || tokens_[i - 1].is(")") || tokens_[i - 1].is("]") ||
                     tokens_[i - 1].is("}"))) {
                    has_call = true;
                }
                ++depth;
            } else if (syntax::is_close_bracket(t)) {
                --depth;
            } else if (depth == 0 && t.kind == TokenKind::Punct &&
                       (syntax::is_assignment_operator(t.text) || t.is("++") || t.is("--"))) {
                return StatementKind::Assignment;
            }
        }
        return has_call ? StatementKind::Call : StatementKind::Other;
    }

    // ---- call sites -------------------------------------------------------

    void annotate_calls();

    [[nodiscard]] int first_line_with_replacement() const
    {
        const auto at = owned_.find("\xef\xbf\xbd");
        return 1 + static_cast<int>(std::count(owned_.begin(), owned_.begin() + static_cast<std::ptrdiff_t>(at), '\n'));
    }

    std::size_t invalid_bytes_ = 0;
    std::string owned_;
    std::string_view source_;
    std::vector<Token> tokens_;
    std::vector<std::size_t> match_;
    std::set<std::string> type_names_;
    SourceUnit unit_;
};

// Call-site extraction runs after the whole unit is parsed so that contract,
// struct and enum names declared later in the file are known.

const std::set<std::string, std::less<>> kNonCallKeywords = {
    "if",      "for",     "while",    "do",     "return", "returns", "emit",     "new",
    "function", "mapping", "catch",   "try",    "type",   "assembly", "unchecked", "require",
    "assert",  "revert",  "modifier", "event",  "error",
};

const std::set<std::string, std::less<>> kBuiltinReceivers = {
    "abi", "msg", "block", "tx", "bytes", "string", "super",
};

const std::set<std::string, std::less<>> kSafeMathMembers = {"add", "sub", "mul", "div", "mod"};

struct CallEnvironment
{
    const SourceUnit* unit = nullptr;
    const ContractDef* contract = nullptr;
    const std::set<std::string>* type_names = nullptr;
    std::set<std::string> related_contracts;  // self and ancestors
    std::set<std::string> function_names;     // every function declared in the unit
    std::map<std::string, std::string, std::less<>> variable_types;
};

bool address_like(std::string_view receiver, const CallEnvironment& env)
{
    if (receiver.starts_with("payable(") || receiver.starts_with("address(") || receiver == "msg.sender" ||
        receiver == "tx.origin") {
        return true;
    }
    std::string_view root = receiver;
    bool indexed = false;
    if (const std::size_t bracket = receiver.find('['); bracket != std::string_view::npos) {
        root = receiver.substr(0, bracket);
        indexed = true;
    }
    const auto it = env.variable_types.find(root);
    if (it == env.variable_types.end()) {
        return false;
    }
    const std::string_view type = it->second;
    if (!indexed) {
        return type == "address" || type == "address payable";
    }
    return type.starts_with("address") && type.find("[]") != std::string_view::npos;
}

bool known_variable(std::string_view receiver, const CallEnvironment& env)
{
    std::string_view root = receiver.substr(0, receiver.find('['));
    return env.variable_types.contains(root);
}

// push/pop on a storage or memory array, bytes or string variable.
bool dynamic_array_member(std::string_view receiver, std::string_view member, const CallEnvironment& env)
{
    if (member != "push" && member != "pop") {
        return false;
    }
    const auto it = env.variable_types.find(receiver.substr(0, receiver.find('[')));
    if (it == env.variable_types.end()) {
        return false;
    }
    const std::string_view type = it->second;
    return type.find('[') != std::string_view::npos || type == "bytes" || type == "string";
}

CallKind classify_call(const CallSite& call, bool uses_selector, const CallEnvironment& env)
{
    const std::string_view receiver = call.receiver();
    const std::string_view member = call.final_segment();
    if (receiver.empty()) {
        return CallKind::Internal;
    }
    const bool builtin_receiver = kBuiltinReceivers.contains(receiver) || receiver.starts_with("type(");
    if (member == "call" || member == "delegatecall" || member == "staticcall" || (uses_selector && !builtin_receiver)) {
        return CallKind::LowLevel;
    }
    if (member == "send" || member == "transfer") {
        if (address_like(receiver, env)) {
            return CallKind::LowLevel;
        }
        if (!known_variable(receiver, env) && call.arg_count == 1) {
            return CallKind::LowLevel;
        }
        return CallKind::ExternalMember;
    }
    if (receiver == "this") {
        return CallKind::ExternalMember;
    }
    if (builtin_receiver || env.related_contracts.contains(std::string(receiver)) || kSafeMathMembers.contains(member) ||
        dynamic_array_member(receiver, member, env)) {
        return CallKind::Internal;
    }
    if (const ContractDef* lib = env.unit->find_contract(receiver); lib && lib->kind == ContractKind::Library) {
        return CallKind::Internal;
    }
    return CallKind::ExternalMember;
}

std::vector<CallSite> extract_calls(const std::vector<Token>& tokens, const CallEnvironment& env)
{
    std::vector<CallSite> calls;
    const std::size_t n = tokens.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Token& t = tokens[i];
        if (!t.is_identifier()) {
            continue;
        }
        std::size_t open = i + 1;
        bool options = false;
        if (open < n && tokens[open].is("{")) {
            const std::size_t m = syntax::match_forward(tokens, open);
            if (m == npos || m + 1 >= n || !tokens[m + 1].is("(")) {
                continue;
            }
            options = true;
            open = m + 1;
        }
        if (open >= n || !tokens[open].is("(")) {
            continue;
        }
        if (kNonCallKeywords.contains(t.text) || syntax::is_elementary_type(t.text)) {
            continue;
        }
        const bool member = i > 0 && tokens[i - 1].is(".");
        const std::size_t close = syntax::match_forward(tokens, open);
        if (!member) {
            if (env.type_names->contains(t.text)) {
                continue;
            }
            // Capitalized names that are not known functions are conversions to
            // types declared elsewhere (IERC20(token)).
            const bool capitalized = std::isupper(static_cast<unsigned char>(t.text[0])) != 0;
            const bool cast_then_member = capitalized && close != npos && close + 1 < n && tokens[close + 1].is(".");
            if (cast_then_member || (capitalized && !env.function_names.contains(t.text))) {
                continue;
            }
        }

        std::string callee = t.text;
        std::size_t k = i;
        while (k >= 2 && tokens[k - 1].is(".")) {
            const std::size_t prev = k - 2;
            if (tokens[prev].is_identifier()) {
                callee = tokens[prev].text + "." + callee;
                k = prev;
            } else if (tokens[prev].is(")") || tokens[prev].is("]")) {
                const std::size_t o = syntax::match_backward(tokens, prev);
                if (o == npos) {
                    break;
                }
                const std::size_t s = (o > 0 && tokens[o - 1].is_identifier()) ? o - 1 : o;
                callee = syntax::join_tokens(tokens, s, prev + 1) + "." + callee;
                k = s;
            } else {
                break;
            }
        }
        if (k > 0 && (tokens[k - 1].is("emit") || tokens[k - 1].is("new"))) {
            continue;
        }

        bool uses_selector = false;
        const std::size_t args_end = close == npos ? n : close;
        for (std::size_t j = open + 1; j < args_end; ++j) {
            const Token& a = tokens[j];
            if ((a.is("selector") && tokens[j - 1].is(".")) || a.is("encodeWithSelector") ||
                a.is("encodeWithSignature") || a.is("encodeCall")) {
                uses_selector = true;
                break;
            }
        }

        CallSite call;
        call.callee = std::move(callee);
        call.line = t.line;
        call.arg_count = syntax::argument_count(tokens, open, close);
        call.offset = t.offset;
        call.has_call_options = options;
        call.kind = classify_call(call, uses_selector, env);
        calls.push_back(std::move(call));
    }
    return calls;
}

void collect_ancestors(const SourceUnit& unit, const ContractDef& contract, std::set<std::string>& seen)
{
    for (const std::string& parent : contract.inherits) {
        if (!seen.insert(parent).second) {
            continue;
        }
        if (const ContractDef* def = unit.find_contract(parent)) {
            collect_ancestors(unit, *def, seen);
        }
    }
}

void add_declared_types(const std::vector<Statement>& statements, CallEnvironment& env)
{
    for (const Statement& s : statements) {
        syntax::TokenSpan span = s.tokens;
        if (s.kind == StatementKind::Loop && span.size() > 2 && span[0].is("for")) {
            std::size_t semi = 2;
            while (semi < span.size() && !span[semi].is(";")) {
                ++semi;
            }
            span = span.subspan(2, semi - 2);
        } else if (s.kind == StatementKind::If || s.kind == StatementKind::Loop || s.kind == StatementKind::TryCatch) {
            span = {};
        }
        for (const syntax::Declaration& d : syntax::find_declarations(span)) {
            env.variable_types.emplace(d.name, d.type_name);
        }
        add_declared_types(s.children, env);
    }
}

void annotate_statements(std::vector<Statement>& statements, const CallEnvironment& env)
{
    for (Statement& s : statements) {
        s.calls = extract_calls(s.tokens, env);
        annotate_statements(s.children, env);
    }
}

void number_calls(std::vector<Statement>& statements, std::size_t& index, std::vector<CallSite>& out)
{
    for (Statement& s : statements) {
        for (CallSite& call : s.calls) {
            call.statement_index = index;
            out.push_back(call);
        }
        ++index;
        number_calls(s.children, index, out);
    }
}

void Parser::annotate_calls()
{
    std::set<std::string> function_names;
    for (const ContractDef& contract : unit_.contracts) {
        for (const FunctionDef& function : contract.functions) {
            function_names.insert(function.name);
        }
    }
    for (ContractDef& contract : unit_.contracts) {
        CallEnvironment base;
        base.unit = &unit_;
        base.contract = &contract;
        base.type_names = &type_names_;
        base.function_names = function_names;
        base.related_contracts.insert(contract.name);
        collect_ancestors(unit_, contract, base.related_contracts);
        for (const std::string& name : base.related_contracts) {
            if (const ContractDef* def = unit_.find_contract(name)) {
                for (const StateVarDef& var : def->state_vars) {
                    base.variable_types.emplace(var.name, var.type_name);
                }
            }
        }

        auto annotate_function = [&](FunctionDef& function) {
            CallEnvironment env = base;
            for (const auto* list : {&function.params, &function.returns}) {
                for (const ParamDef& param : *list) {
                    if (!param.name.empty()) {
                        env.variable_types[param.name] = param.type_name;
                    }
                }
            }
            add_declared_types(function.body, env);
            annotate_statements(function.body, env);
            std::size_t index = 0;
            function.calls.clear();
            number_calls(function.body, index, function.calls);
        };
        for (FunctionDef& function : contract.functions) {
            annotate_function(function);
        }
        if (contract.constructor) {
            annotate_function(*contract.constructor);
        }
        for (ModifierDef& modifier : contract.modifiers) {
            CallEnvironment env = base;
            for (const ParamDef& param : modifier.params) {
                if (!param.name.empty()) {
                    env.variable_types[param.name] = param.type_name;
                }
            }
            annotate_statements(modifier.body, env);
            std::size_t index = 0;
            std::vector<CallSite> ignored;
            number_calls(modifier.body, index, ignored);
        }
    }
}

}  // namespace

bool is_valid_identifier(std::string_view text)
{
    if (text.empty() || (text[0] >= '0' && text[0] <= '9')) {
        return false;
    }
    return std::all_of(text.begin(), text.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '$';
    });
}

SourceUnit parse_source(std::string_view source, std::string_view path)
{
    return Parser(source, path).run();
}

SourceUnit load_source(std::string_view source, std::string_view path)
{
    return resolve_unit(parse_source(source, path));
}

}  // namespace smartgraph
