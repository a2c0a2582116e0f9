/**
 * @file graph.hpp
 * @brief Typed functional-dependency graph of one contract and its DOT export.
 */

#pragma once

#include "smartgraph/model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smartgraph {

enum class NodeKind {
    Contract,
    Function,
    Constructor,
    Modifier,
    StateVar,
    Event,
    Struct,
    Loop,
    Conditional,
    ExternalBoundary,
};

enum class EdgeKind {
    DataWrite,
    DataRead,
    InputDependency,
    Initialization,
    SystemicCall,
    Emits,
    GuardedBy,
    Contains,
};

[[nodiscard]] std::string_view to_string(NodeKind kind);
[[nodiscard]] std::string_view to_string(EdgeKind kind);
[[nodiscard]] std::optional<NodeKind> node_kind_from_string(std::string_view text);
[[nodiscard]] std::optional<EdgeKind> edge_kind_from_string(std::string_view text);

struct GraphNode
{
    std::string id;  // "<contract>.<kind>.<name>"
    NodeKind kind = NodeKind::Contract;
    std::string label;
    int line = 0;
    // Loop/conditional nodes only: 1 plus the deepest if/loop nesting below them.
    int depth = 0;

    friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct GraphEdge
{
    std::string from;
    std::string to;
    EdgeKind kind = EdgeKind::DataWrite;
    int line = 0;
    std::string label;  // callee text for systemic_call, empty otherwise

    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct DependencyGraph
{
    std::string contract_name;
    std::vector<GraphNode> nodes;  // sorted by id
    std::vector<GraphEdge> edges;  // sorted by (from, kind, to, line, label)

    [[nodiscard]] const GraphNode* find_node(std::string_view id) const;
    [[nodiscard]] bool has_node(std::string_view id) const { return find_node(id) != nullptr; }

    friend bool operator==(const DependencyGraph&, const DependencyGraph&) = default;
};

[[nodiscard]] std::string node_id(std::string_view contract, NodeKind kind, std::string_view name);

/// Node id of a function or the constructor. Overloads after the first get a "#k" suffix.
[[nodiscard]] std::string callable_node_id(const ContractDef& contract, const FunctionDef& function);

/// Node id of the contract's single external boundary node.
[[nodiscard]] std::string external_boundary_id(std::string_view contract);

[[nodiscard]] DependencyGraph build_graph(const ContractDef& contract);

/// Restores the ordering invariants after nodes or edges were edited.
void normalize(DependencyGraph& graph);

[[nodiscard]] std::string export_dot(const DependencyGraph& graph);
/// One digraph per contract, concatenated; an empty digraph when there are none.
[[nodiscard]] std::string export_dot(const std::vector<DependencyGraph>& graphs);

/**
 * Nodes in `node_ids` plus their one-hop neighbours, with every edge of
 * `graph` between retained nodes. Throws std::invalid_argument naming the
 * first id that is not in the graph.
 */
[[nodiscard]] DependencyGraph subgraph_for_warning(const DependencyGraph& graph,
                                                   const std::vector<std::string>& node_ids);

}  // namespace smartgraph
