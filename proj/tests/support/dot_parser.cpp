#include "dot_parser.hpp"

#include <cctype>
#include <stdexcept>

namespace dotcheck {

namespace {

enum class Kind { Id, Quoted, Html, Symbol, EdgeOp, End };

struct Lexeme
{
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
};

struct SyntaxError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

bool id_start(unsigned char c)
{
    return std::isalpha(c) || c == '_' || c >= 0x80;
}

bool id_char(unsigned char c)
{
    return id_start(c) || std::isdigit(c);
}

std::string lower(std::string text)
{
    for (char& c : text) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return text;
}

bool is_keyword(const std::string& text)
{
    const std::string l = lower(text);
    return l == "node" || l == "edge" || l == "graph" || l == "digraph" || l == "subgraph" || l == "strict";
}

std::vector<Lexeme> lex(std::string_view in)
{
    std::vector<Lexeme> out;
    int line = 1;
    bool line_start = true;
    std::size_t i = 0;
    auto fail = [&](const std::string& what) { throw SyntaxError("line " + std::to_string(line) + ": " + what); };
    while (i < in.size()) {
        const unsigned char c = static_cast<unsigned char>(in[i]);
        if (c == '\n') {
            ++line;
            line_start = true;
            ++i;
            continue;
        }
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (c == '#' && line_start) {
            while (i < in.size() && in[i] != '\n') {
                ++i;
            }
            continue;
        }
        line_start = false;
        if (c == '/' && i + 1 < in.size() && in[i + 1] == '/') {
            while (i < in.size() && in[i] != '\n') {
                ++i;
            }
            continue;
        }
        if (c == '/' && i + 1 < in.size() && in[i + 1] == '*') {
            const std::size_t close = in.find("*/", i + 2);
            if (close == std::string_view::npos) {
                fail("unterminated comment");
            }
            for (std::size_t k = i; k < close; ++k) {
                line += in[k] == '\n' ? 1 : 0;
            }
            i = close + 2;
            continue;
        }
        Lexeme lx;
        lx.line = line;
        if (c == '"') {
            ++i;
            while (true) {
                if (i >= in.size()) {
                    fail("unterminated string");
                }
                if (in[i] == '\\' && i + 1 < in.size()) {
                    if (in[i + 1] == '"') {
                        lx.text += '"';
                    } else if (in[i + 1] == '\n') {
                        ++line;
                    } else {
                        lx.text += in[i];
                        lx.text += in[i + 1];
                    }
                    i += 2;
                    continue;
                }
                if (in[i] == '"') {
                    ++i;
                    break;
                }
                line += in[i] == '\n' ? 1 : 0;
                lx.text += in[i++];
            }
            lx.kind = Kind::Quoted;
        } else if (c == '<') {
            int depth = 0;
            do {
                if (i >= in.size()) {
                    fail("unterminated HTML string");
                }
                depth += in[i] == '<' ? 1 : in[i] == '>' ? -1 : 0;
                line += in[i] == '\n' ? 1 : 0;
                lx.text += in[i++];
            } while (depth > 0);
            lx.kind = Kind::Html;
        } else if (c == '-' && i + 1 < in.size() && (in[i + 1] == '>' || in[i + 1] == '-')) {
            lx.kind = Kind::EdgeOp;
            lx.text = std::string(in.substr(i, 2));
            i += 2;
        } else if (std::isdigit(c) || c == '.' || c == '-') {
            std::size_t j = i;
            if (in[j] == '-') {
                ++j;
            }
            bool digits = false;
            while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j]))) {
                ++j;
                digits = true;
            }
            if (j < in.size() && in[j] == '.') {
                ++j;
                while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j]))) {
                    ++j;
                    digits = true;
                }
            }
            if (!digits) {
                fail("malformed numeral");
            }
            if (j < in.size() && id_start(static_cast<unsigned char>(in[j]))) {
                fail("numeral followed by identifier characters");
            }
            lx.kind = Kind::Id;
            lx.text = std::string(in.substr(i, j - i));
            i = j;
        } else if (id_start(c)) {
            std::size_t j = i;
            while (j < in.size() && id_char(static_cast<unsigned char>(in[j]))) {
                ++j;
            }
            lx.kind = Kind::Id;
            lx.text = std::string(in.substr(i, j - i));
            i = j;
        } else if (std::string_view("{}[]=;,:").find(static_cast<char>(c)) != std::string_view::npos) {
            lx.kind = Kind::Symbol;
            lx.text = std::string(1, static_cast<char>(c));
            ++i;
        } else {
            fail(std::string("unexpected character '") + static_cast<char>(c) + "'");
        }
        out.push_back(std::move(lx));
    }
    Lexeme end;
    end.line = line;
    out.push_back(end);
    return out;
}

class Parser
{
public:
    explicit Parser(std::vector<Lexeme> lexemes) : lx_(std::move(lexemes)) {}

    std::vector<Graph> parse_all()
    {
        std::vector<Graph> graphs;
        while (peek().kind != Kind::End) {
            graphs.push_back(parse_graph());
        }
        if (graphs.empty()) {
            fail("no graph");
        }
        return graphs;
    }

private:
    const Lexeme& peek(std::size_t ahead = 0) const
    {
        const std::size_t k = std::min(pos_ + ahead, lx_.size() - 1);
        return lx_[k];
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw SyntaxError("line " + std::to_string(peek().line) + ": " + what);
    }

    bool keyword(const char* word, std::size_t ahead = 0) const
    {
        return peek(ahead).kind == Kind::Id && lower(peek(ahead).text) == word;
    }

    bool symbol(char s, std::size_t ahead = 0) const
    {
        return peek(ahead).kind == Kind::Symbol && peek(ahead).text[0] == s;
    }

    void expect(char s)
    {
        if (!symbol(s)) {
            fail(std::string("expected '") + s + "'");
        }
        ++pos_;
    }

    bool at_id(std::size_t ahead = 0) const
    {
        const Lexeme& l = peek(ahead);
        if (l.kind == Kind::Quoted || l.kind == Kind::Html) {
            return true;
        }
        return l.kind == Kind::Id && !is_keyword(l.text);
    }

    std::string take_id()
    {
        if (!at_id()) {
            fail("expected ID");
        }
        return lx_[pos_++].text;
    }

    Graph parse_graph()
    {
        Graph g;
        if (keyword("strict")) {
            g.strict = true;
            ++pos_;
        }
        if (keyword("digraph")) {
            g.directed = true;
        } else if (!keyword("graph")) {
            fail("expected 'graph' or 'digraph'");
        }
        ++pos_;
        if (at_id()) {
            g.name = take_id();
        }
        expect('{');
        parse_stmt_list(g);
        expect('}');
        return g;
    }

    void parse_stmt_list(Graph& g)
    {
        while (!symbol('}')) {
            if (peek().kind == Kind::End) {
                fail("unexpected end of input");
            }
            parse_stmt(g);
            if (symbol(';')) {
                ++pos_;
            }
        }
    }

    Attributes parse_attr_lists()
    {
        Attributes attrs;
        while (symbol('[')) {
            ++pos_;
            while (!symbol(']')) {
                const std::string key = take_id();
                expect('=');
                attrs[key] = take_id();
                if (symbol(';') || symbol(',')) {
                    ++pos_;
                }
            }
            ++pos_;
        }
        return attrs;
    }

    // node_id with optional port; returns the plain id.
    std::string parse_node_id()
    {
        std::string id = take_id();
        if (symbol(':')) {
            ++pos_;
            take_id();
            if (symbol(':')) {
                ++pos_;
                take_id();
            }
        }
        return id;
    }

    // Subgraph operand; its node ids become the edge endpoints.
    std::vector<std::string> parse_subgraph(Graph& g)
    {
        if (keyword("subgraph")) {
            ++pos_;
            if (at_id()) {
                take_id();
            }
        }
        expect('{');
        const std::size_t first_node = g.nodes.size();
        const std::size_t first_edge = g.edges.size();
        parse_stmt_list(g);
        expect('}');
        std::vector<std::string> ids;
        for (std::size_t i = first_node; i < g.nodes.size(); ++i) {
            ids.push_back(g.nodes[i].id);
        }
        for (std::size_t i = first_edge; i < g.edges.size(); ++i) {
            ids.push_back(g.edges[i].from);
            ids.push_back(g.edges[i].to);
        }
        return ids;
    }

    std::vector<std::string> parse_operand(Graph& g)
    {
        if (keyword("subgraph") || symbol('{')) {
            return parse_subgraph(g);
        }
        return {parse_node_id()};
    }

    void parse_stmt(Graph& g)
    {
        if (keyword("graph") || keyword("node") || keyword("edge")) {
            ++pos_;
            if (!symbol('[')) {
                fail("attribute statement without attribute list");
            }
            parse_attr_lists();
            return;
        }
        if (at_id() && symbol('=', 1)) {
            take_id();
            ++pos_;
            take_id();
            return;
        }
        std::vector<std::vector<std::string>> chain;
        const bool single_node = at_id();
        chain.push_back(parse_operand(g));
        while (peek().kind == Kind::EdgeOp) {
            if (peek().text != (g.directed ? "->" : "--")) {
                fail("edge operator '" + peek().text + "' in " + (g.directed ? "digraph" : "graph"));
            }
            ++pos_;
            chain.push_back(parse_operand(g));
        }
        const Attributes attrs = parse_attr_lists();
        if (chain.size() == 1) {
            if (single_node) {
                g.nodes.push_back(NodeStatement{chain.front().front(), attrs});
            }
            return;
        }
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
            for (const std::string& from : chain[k]) {
                for (const std::string& to : chain[k + 1]) {
                    g.edges.push_back(EdgeStatement{from, to, attrs});
                }
            }
        }
    }

    std::vector<Lexeme> lx_;
    std::size_t pos_ = 0;
};

}  // namespace

ParseResult parse(std::string_view text)
{
    ParseResult result;
    try {
        result.graphs = Parser(lex(text)).parse_all();
        result.ok = true;
    } catch (const SyntaxError& e) {
        result.error = e.what();
    }
    return result;
}

}  // namespace dotcheck
