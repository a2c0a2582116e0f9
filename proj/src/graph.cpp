#include "smartgraph/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace smartgraph {

namespace {

constexpr NodeKind kAllNodeKinds[] = {
    NodeKind::Contract, NodeKind::Function, NodeKind::Constructor, NodeKind::Modifier,    NodeKind::StateVar,
    NodeKind::Event,    NodeKind::Struct,   NodeKind::Loop,        NodeKind::Conditional, NodeKind::ExternalBoundary,
};

constexpr EdgeKind kAllEdgeKinds[] = {
    EdgeKind::DataWrite,    EdgeKind::DataRead, EdgeKind::InputDependency, EdgeKind::Initialization,
    EdgeKind::SystemicCall, EdgeKind::Emits,    EdgeKind::GuardedBy,       EdgeKind::Contains,
};

// Struct name referenced by a parameter type: "Order[] memory" -> "Order", "Lib.Order" -> "Order".
std::string base_type_name(std::string_view type)
{
    if (const std::size_t bracket = type.find('['); bracket != std::string_view::npos) {
        type = type.substr(0, bracket);
    }
    if (const std::size_t dot = type.rfind('.'); dot != std::string_view::npos) {
        type = type.substr(dot + 1);
    }
    return std::string(type);
}

int nesting_depth(const Statement& statement)
{
    int deepest = 0;
    for (const Statement& child : statement.children) {
        deepest = std::max(deepest, nesting_depth(child));
    }
    const bool counts = statement.kind == StatementKind::If || statement.kind == StatementKind::Loop;
    return deepest + (counts ? 1 : 0);
}

class GraphBuilder
{
public:
    explicit GraphBuilder(const ContractDef& contract)
        : contract_(contract)
    {
        graph_.contract_name = contract.name;
    }

    DependencyGraph build()
    {
        add_node(NodeKind::Contract, contract_.name, contract_.line_span.first);
        for (const StateVarDef& var : contract_.state_vars) {
            add_node(NodeKind::StateVar, var.name, var.line);
        }
        for (const EventDef& event : contract_.events) {
            add_node(NodeKind::Event, event.name, event.line);
        }
        for (const StructDef& def : contract_.structs) {
            add_node(NodeKind::Struct, def.name, def.line);
        }
        for (const ModifierDef& modifier : contract_.modifiers) {
            add_node(NodeKind::Modifier, modifier.name, modifier.line_span.first);
        }
        for (const FunctionDef* function : contract_.callables()) {
            add_callable(*function);
        }
        normalize(graph_);
        return std::move(graph_);
    }

private:
    void add_node(NodeKind kind, std::string_view name, int line, int depth = 0)
    {
        add_node_with_id(node_id(contract_.name, kind, name), kind, std::string(name), line, depth);
    }

    void add_node_with_id(std::string id, NodeKind kind, std::string label, int line, int depth = 0)
    {
        if (ids_.insert(id).second) {
            graph_.nodes.push_back(GraphNode{std::move(id), kind, std::move(label), line, depth});
        }
    }

    void add_edge(const std::string& from, const std::string& to, EdgeKind kind, int line, std::string label = {})
    {
        graph_.edges.push_back(GraphEdge{from, to, kind, line, std::move(label)});
    }

    // Node id of a state variable, materializing inherited ones on first use.
    std::string state_var_node(std::string_view name)
    {
        const StateVarDef* var = contract_.find_state_var(name);
        add_node(NodeKind::StateVar, name, var != nullptr ? var->line : 0);
        return node_id(contract_.name, NodeKind::StateVar, name);
    }

    void add_callable(const FunctionDef& function)
    {
        const bool is_constructor = &function == (contract_.constructor ? &*contract_.constructor : nullptr);
        const std::string id = callable_node_id(contract_, function);
        add_node_with_id(id, is_constructor ? NodeKind::Constructor : NodeKind::Function, function.name,
                         function.line_span.first);

        std::map<std::string, int> first_write;
        std::map<std::string, int> first_read;
        for (const StateAccess& access : function.accesses) {
            auto& first = access.kind == AccessKind::Write ? first_write : first_read;
            first.emplace(access.name, access.line);
        }
        for (const auto& [name, line] : first_write) {
            const std::string target = state_var_node(name);
            add_edge(id, target, EdgeKind::DataWrite, line);
            if (is_constructor) {
                add_edge(id, target, EdgeKind::Initialization, line);
            }
        }
        for (const auto& [name, line] : first_read) {
            const std::string target = state_var_node(name);
            add_edge(id, target, EdgeKind::DataRead, line);
            if (!function.writes.contains(name)) {
                add_edge(target, id, EdgeKind::InputDependency, line);
            }
        }

        for (const ParamDef& param : function.params) {
            const std::string type = base_type_name(param.type_name);
            if (contract_.find_struct(type) != nullptr) {
                add_edge(node_id(contract_.name, NodeKind::Struct, type), id, EdgeKind::InputDependency,
                         function.line_span.first);
            }
        }

        for (const ModifierRef& ref : function.modifiers) {
            if (const ModifierDef* modifier = contract_.find_modifier(ref.name)) {
                add_node(NodeKind::Modifier, ref.name, modifier->line_span.first);
                add_edge(id, node_id(contract_.name, NodeKind::Modifier, ref.name), EdgeKind::GuardedBy,
                         function.line_span.first);
            }
        }

        for (const CallSite& call : function.calls) {
            if (call.kind != CallKind::Internal) {
                const std::string boundary = external_boundary_id(contract_.name);
                add_node_with_id(boundary, NodeKind::ExternalBoundary, "external", contract_.line_span.first);
                add_edge(id, boundary, EdgeKind::SystemicCall, call.line, call.callee);
            } else if (is_constructor) {
                if (const FunctionDef* callee = resolve_internal(call)) {
                    add_edge(id, callable_node_id(contract_, *callee), EdgeKind::Initialization, call.line);
                }
            }
        }

        int conditionals = 0;
        int loops = 0;
        for (const Statement& statement : function.body) {
            add_emits(id, statement);
            if (statement.kind != StatementKind::If && statement.kind != StatementKind::Loop) {
                continue;
            }
            const bool loop = statement.kind == StatementKind::Loop;
            const int ordinal = loop ? ++loops : ++conditionals;
            const NodeKind kind = loop ? NodeKind::Loop : NodeKind::Conditional;
            std::string child = id + "." + std::string(to_string(kind)) + "." + std::to_string(ordinal);
            add_node_with_id(child, kind, std::string(to_string(kind)) + " " + std::to_string(ordinal),
                             statement.line, nesting_depth(statement));
            add_edge(id, child, EdgeKind::Contains, statement.line);
        }
    }

    void add_emits(const std::string& id, const Statement& statement)
    {
        if (statement.kind == StatementKind::Emit && !statement.emitted_event.empty()) {
            if (const EventDef* event = contract_.find_event(statement.emitted_event)) {
                add_node(NodeKind::Event, event->name, event->line);
                add_edge(id, node_id(contract_.name, NodeKind::Event, event->name), EdgeKind::Emits, statement.line);
            }
        }
        for (const Statement& child : statement.children) {
            add_emits(id, child);
        }
    }

    const FunctionDef* resolve_internal(const CallSite& call) const
    {
        const std::string_view receiver = call.receiver();
        if (!receiver.empty() && receiver != "this" && receiver != "super" && receiver != contract_.name) {
            return nullptr;
        }
        const std::string_view name = call.final_segment();
        const FunctionDef* fallback = nullptr;
        for (const FunctionDef& function : contract_.functions) {
            if (function.name != name) {
                continue;
            }
            if (static_cast<int>(function.params.size()) == call.arg_count) {
                return &function;
            }
            if (fallback == nullptr) {
                fallback = &function;
            }
        }
        return fallback;
    }

    const ContractDef& contract_;
    DependencyGraph graph_;
    std::set<std::string> ids_;
};

// ---- DOT --------------------------------------------------------------------

bool is_dot_keyword(std::string_view word)
{
    std::string lower(word);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    return lower == "node" || lower == "edge" || lower == "graph" || lower == "digraph" || lower == "subgraph" ||
           lower == "strict";
}

bool is_plain_dot_id(std::string_view text)
{
    if (text.empty() || (text[0] >= '0' && text[0] <= '9') || is_dot_keyword(text)) {
        return false;
    }
    return std::all_of(text.begin(), text.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

std::string quote(std::string_view text)
{
    std::string out = "\"";
    for (const char c : text) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        if (c == '\n' || c == '\r') {
            out += ' ';
            continue;
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string_view node_shape(NodeKind kind)
{
    switch (kind) {
    case NodeKind::Contract:
        return "box";
    case NodeKind::Function:
        return "ellipse";
    case NodeKind::Constructor:
        return "house";
    case NodeKind::Modifier:
        return "octagon";
    case NodeKind::StateVar:
        return "cylinder";
    case NodeKind::Event:
        return "note";
    case NodeKind::Struct:
        return "tab";
    case NodeKind::Loop:
        return "hexagon";
    case NodeKind::Conditional:
        return "diamond";
    case NodeKind::ExternalBoundary:
        return "doubleoctagon";
    }
    return "ellipse";
}

std::string edge_attributes(const GraphEdge& edge)
{
    switch (edge.kind) {
    case EdgeKind::DataWrite:
        return "style=solid";
    case EdgeKind::DataRead:
        return "style=dashed";
    case EdgeKind::Initialization:
        return "style=bold";
    case EdgeKind::SystemicCall:
        return "style=dotted, label=" + quote(edge.label);
    case EdgeKind::InputDependency:
        return "style=solid, color=blue, arrowhead=empty";
    case EdgeKind::Emits:
        return "style=solid, color=darkgreen, arrowhead=vee";
    case EdgeKind::GuardedBy:
        return "style=solid, color=red, arrowhead=tee";
    case EdgeKind::Contains:
        return "style=solid, color=gray, arrowhead=odiamond";
    }
    return "style=solid";
}

}  // namespace

std::string_view to_string(NodeKind kind)
{
    switch (kind) {
    case NodeKind::Contract:
        return "contract";
    case NodeKind::Function:
        return "function";
    case NodeKind::Constructor:
        return "constructor";
    case NodeKind::Modifier:
        return "modifier";
    case NodeKind::StateVar:
        return "state_var";
    case NodeKind::Event:
        return "event";
    case NodeKind::Struct:
        return "struct";
    case NodeKind::Loop:
        return "loop";
    case NodeKind::Conditional:
        return "conditional";
    case NodeKind::ExternalBoundary:
        return "external_boundary";
    }
    return "contract";
}

std::string_view to_string(EdgeKind kind)
{
    switch (kind) {
    case EdgeKind::DataWrite:
        return "data_write";
    case EdgeKind::DataRead:
        return "data_read";
    case EdgeKind::InputDependency:
        return "input_dependency";
    case EdgeKind::Initialization:
        return "initialization";
    case EdgeKind::SystemicCall:
        return "systemic_call";
    case EdgeKind::Emits:
        return "emits";
    case EdgeKind::GuardedBy:
        return "guarded_by";
    case EdgeKind::Contains:
        return "contains";
    }
    return "data_write";
}

std::optional<NodeKind> node_kind_from_string(std::string_view text)
{
    for (NodeKind kind : kAllNodeKinds) {
        if (to_string(kind) == text) {
            return kind;
        }
    }
    return std::nullopt;
}

std::optional<EdgeKind> edge_kind_from_string(std::string_view text)
{
    for (EdgeKind kind : kAllEdgeKinds) {
        if (to_string(kind) == text) {
            return kind;
        }
    }
    return std::nullopt;
}

const GraphNode* DependencyGraph::find_node(std::string_view id) const
{
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id,
                               [](const GraphNode& node, std::string_view key) { return node.id < key; });
    if (it != nodes.end() && it->id == id) {
        return &*it;
    }
    // Tolerate graphs whose nodes were appended out of order.
    it = std::find_if(nodes.begin(), nodes.end(), [&](const GraphNode& node) { return node.id == id; });
    return it == nodes.end() ? nullptr : &*it;
}

std::string node_id(std::string_view contract, NodeKind kind, std::string_view name)
{
    std::string id(contract);
    id += '.';
    id += to_string(kind);
    id += '.';
    id += name;
    return id;
}

std::string callable_node_id(const ContractDef& contract, const FunctionDef& function)
{
    if (contract.constructor && &function == &*contract.constructor) {
        return node_id(contract.name, NodeKind::Constructor, "constructor");
    }
    int ordinal = 0;
    for (const FunctionDef& candidate : contract.functions) {
        if (candidate.name == function.name) {
            ++ordinal;
        }
        if (&candidate == &function) {
            break;
        }
    }
    std::string name = function.name;
    if (ordinal > 1) {
        name += "#" + std::to_string(ordinal);
    }
    return node_id(contract.name, NodeKind::Function, name);
}

std::string external_boundary_id(std::string_view contract)
{
    return node_id(contract, NodeKind::ExternalBoundary, "external");
}

DependencyGraph build_graph(const ContractDef& contract)
{
    return GraphBuilder(contract).build();
}

void normalize(DependencyGraph& graph)
{
    std::sort(graph.nodes.begin(), graph.nodes.end(),
              [](const GraphNode& a, const GraphNode& b) { return a.id < b.id; });
    auto key = [](const GraphEdge& e) { return std::tie(e.from, e.to, e.line, e.label); };
    std::sort(graph.edges.begin(), graph.edges.end(), [&](const GraphEdge& a, const GraphEdge& b) {
        if (a.from != b.from) {
            return a.from < b.from;
        }
        if (a.kind != b.kind) {
            return to_string(a.kind) < to_string(b.kind);
        }
        return key(a) < key(b);
    });
    graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()), graph.edges.end());
}

std::string export_dot(const DependencyGraph& graph)
{
    std::map<std::string, int> label_uses;
    for (const GraphNode& node : graph.nodes) {
        ++label_uses[node.label];
    }
    std::map<std::string, std::string, std::less<>> dot_names;
    for (const GraphNode& node : graph.nodes) {
        const bool bare = is_plain_dot_id(node.label) && label_uses[node.label] == 1;
        dot_names[node.id] = bare ? node.label : quote(node.id);
    }
    auto name_of = [&](const std::string& id) {
        auto it = dot_names.find(id);
        return it != dot_names.end() ? it->second : quote(id);
    };

    std::string out = "digraph " + quote(graph.contract_name) + " {\n";
    out += "  rankdir=LR;\n";
    for (const GraphNode& node : graph.nodes) {
        out += "  " + name_of(node.id) + " [label=" + quote(node.label) + ", shape=" +
               std::string(node_shape(node.kind)) + "];\n";
    }
    for (const GraphEdge& edge : graph.edges) {
        out += "  " + name_of(edge.from) + " -> " + name_of(edge.to) + " [" + edge_attributes(edge) + "];\n";
    }
    out += "}\n";
    return out;
}

std::string export_dot(const std::vector<DependencyGraph>& graphs)
{
    if (graphs.empty()) {
        return "digraph empty {\n}\n";
    }
    std::string out;
    for (const DependencyGraph& graph : graphs) {
        out += export_dot(graph);
    }
    return out;
}

DependencyGraph subgraph_for_warning(const DependencyGraph& graph, const std::vector<std::string>& node_ids)
{
    DependencyGraph sub;
    sub.contract_name = graph.contract_name;
    std::set<std::string, std::less<>> keep;
    for (const std::string& id : node_ids) {
        if (!graph.has_node(id)) {
            throw std::invalid_argument("unknown node id '" + id + "'");
        }
        keep.insert(id);
    }
    const std::set<std::string, std::less<>> seeds = keep;
    for (const GraphEdge& edge : graph.edges) {
        if (seeds.contains(edge.from)) {
            keep.insert(edge.to);
        }
        if (seeds.contains(edge.to)) {
            keep.insert(edge.from);
        }
    }
    for (const GraphNode& node : graph.nodes) {
        if (keep.contains(node.id)) {
            sub.nodes.push_back(node);
        }
    }
    for (const GraphEdge& edge : graph.edges) {
        if (keep.contains(edge.from) && keep.contains(edge.to)) {
            sub.edges.push_back(edge);
        }
    }
    return sub;
}

}  // namespace smartgraph
