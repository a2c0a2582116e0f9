#include "smartgraph/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>

namespace smartgraph {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kReset = "\x1b[0m";

std::string_view severity_color(Severity severity)
{
    switch (severity) {
    case Severity::High:
        return "\x1b[1;31m";
    case Severity::Medium:
        return "\x1b[33m";
    case Severity::Info:
        return "\x1b[36m";
    }
    return "";
}

std::string upper(std::string_view text)
{
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
    return out;
}

Json to_json(const DependencyGraph& graph)
{
    Json nodes = Json::array();
    for (const GraphNode& n : graph.nodes) {
        nodes.push_back(Json{{"id", n.id},
                             {"kind", std::string(to_string(n.kind))},
                             {"label", n.label},
                             {"line", n.line},
                             {"depth", n.depth}});
    }
    Json edges = Json::array();
    for (const GraphEdge& e : graph.edges) {
        edges.push_back(Json{{"from", e.from},
                             {"to", e.to},
                             {"kind", std::string(to_string(e.kind))},
                             {"line", e.line},
                             {"label", e.label}});
    }
    return Json{{"contract", graph.contract_name}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

Json to_json(const Warning& w)
{
    return Json{{"detector", std::string(to_string(w.detector))},
                {"category", w.category},
                {"severity", std::string(to_string(w.severity))},
                {"contract", w.contract},
                {"function", w.function ? Json(*w.function) : Json(nullptr)},
                {"line", w.line},
                {"message", w.message},
                {"related_symbols", w.related_symbols},
                {"related_nodes", w.related_nodes}};
}

// ---- reading back -----------------------------------------------------------

const Json& field(const Json& object, const char* key)
{
    if (!object.is_object() || !object.contains(key)) {
        throw ReportFormatError(std::string("missing key '") + key + "'");
    }
    return object.at(key);
}

std::string string_field(const Json& object, const char* key)
{
    const Json& value = field(object, key);
    if (!value.is_string()) {
        throw ReportFormatError(std::string("key '") + key + "' must be a string");
    }
    return value.get<std::string>();
}

int int_field(const Json& object, const char* key)
{
    const Json& value = field(object, key);
    if (!value.is_number_integer()) {
        throw ReportFormatError(std::string("key '") + key + "' must be an integer");
    }
    return value.get<int>();
}

std::vector<std::string> string_list(const Json& object, const char* key)
{
    const Json& value = field(object, key);
    if (!value.is_array()) {
        throw ReportFormatError(std::string("key '") + key + "' must be an array");
    }
    std::vector<std::string> out;
    for (const Json& item : value) {
        if (!item.is_string()) {
            throw ReportFormatError(std::string("key '") + key + "' must hold strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

const Json& array_field(const Json& object, const char* key)
{
    const Json& value = field(object, key);
    if (!value.is_array()) {
        throw ReportFormatError(std::string("key '") + key + "' must be an array");
    }
    return value;
}

template <typename T, typename Parse>
T parse_enum(const std::string& text, Parse parse, const char* what)
{
    const auto value = parse(text);
    if (!value) {
        throw ReportFormatError(std::string("unknown ") + what + " '" + text + "'");
    }
    return *value;
}

}  // namespace

std::string_view to_string(FailOn policy)
{
    switch (policy) {
    case FailOn::None:
        return "none";
    case FailOn::Warning:
        return "warning";
    case FailOn::High:
        return "high";
    }
    return "warning";
}

std::optional<FailOn> fail_on_from_string(std::string_view text)
{
    for (FailOn policy : {FailOn::None, FailOn::Warning, FailOn::High}) {
        if (to_string(policy) == text) {
            return policy;
        }
    }
    return std::nullopt;
}

AuditReport make_report(const SourceUnit& unit, std::vector<Warning> warnings, std::optional<std::string> generated_at)
{
    AuditReport report;
    report.source_path = unit.path;
    report.generated_at = std::move(generated_at);
    for (const ContractDef& c : unit.contracts) {
        report.contracts.push_back(ContractSummary{c.name, c.kind, static_cast<int>(c.functions.size()),
                                                   static_cast<int>(c.state_vars.size()),
                                                   static_cast<int>(c.events.size())});
        report.graphs.push_back(build_graph(c));
    }
    std::stable_sort(warnings.begin(), warnings.end(), warning_less);
    report.warnings = std::move(warnings);
    report.diagnostics = unit.diagnostics;
    return report;
}

std::string render_text(const AuditReport& report, bool color)
{
    if (report.warnings.empty()) {
        return "No logical security issues detected.\n";
    }
    std::string out;
    std::map<Severity, int> counts;
    for (const Warning& w : report.warnings) {
        ++counts[w.severity];
        std::string tag = "[" + upper(to_string(w.severity)) + "]";
        if (color) {
            tag = std::string(severity_color(w.severity)) + tag + std::string(kReset);
        }
        std::string location = w.contract;
        if (w.function) {
            location += "." + *w.function;
        }
        out += tag + " " + std::string(to_string(w.detector)) + " " + location + ":" + std::to_string(w.line) +
               " — " + w.message + "\n";
        if (!w.related_symbols.empty()) {
            out += "    related: ";
            for (std::size_t i = 0; i < w.related_symbols.size(); ++i) {
                out += (i > 0 ? ", " : "") + w.related_symbols[i];
            }
            out += "\n";
        }
        out += "\n";
    }
    const std::size_t total = report.warnings.size();
    out += std::to_string(total) + (total == 1 ? " warning" : " warnings") + " (high: " +
           std::to_string(counts[Severity::High]) + ", medium: " + std::to_string(counts[Severity::Medium]) +
           ", info: " + std::to_string(counts[Severity::Info]) + ")\n";
    return out;
}

std::string serialize_json(const AuditReport& report)
{
    Json root;
    root["version"] = report.tool_version;
    root["source"] = report.source_path;
    if (report.generated_at) {
        root["generated_at"] = *report.generated_at;
    }
    Json contracts = Json::array();
    for (const ContractSummary& c : report.contracts) {
        contracts.push_back(Json{{"name", c.name},
                                 {"kind", std::string(to_string(c.kind))},
                                 {"functions", c.functions},
                                 {"state_vars", c.state_vars},
                                 {"events", c.events}});
    }
    root["contracts"] = std::move(contracts);
    Json graphs = Json::array();
    for (const DependencyGraph& g : report.graphs) {
        graphs.push_back(to_json(g));
    }
    root["graphs"] = std::move(graphs);
    Json warnings = Json::array();
    for (const Warning& w : report.warnings) {
        warnings.push_back(to_json(w));
    }
    root["warnings"] = std::move(warnings);
    Json diagnostics = Json::array();
    for (const ParseDiagnostic& d : report.diagnostics) {
        diagnostics.push_back(
            Json{{"line", d.line}, {"severity", std::string(to_string(d.severity))}, {"message", d.message}});
    }
    root["diagnostics"] = std::move(diagnostics);
    return root.dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

AuditReport deserialize_json(std::string_view text)
{
    Json root;
    try {
        root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ReportFormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ReportFormatError("report must be a JSON object");
    }

    AuditReport report;
    report.tool_version = string_field(root, "version");
    report.source_path = string_field(root, "source");
    if (root.contains("generated_at")) {
        report.generated_at = string_field(root, "generated_at");
    }
    for (const Json& c : array_field(root, "contracts")) {
        report.contracts.push_back(ContractSummary{
            string_field(c, "name"),
            parse_enum<ContractKind>(string_field(c, "kind"), contract_kind_from_string, "contract kind"),
            int_field(c, "functions"), int_field(c, "state_vars"), int_field(c, "events")});
    }
    for (const Json& g : array_field(root, "graphs")) {
        DependencyGraph graph;
        graph.contract_name = string_field(g, "contract");
        for (const Json& n : array_field(g, "nodes")) {
            graph.nodes.push_back(GraphNode{string_field(n, "id"),
                                            parse_enum<NodeKind>(string_field(n, "kind"), node_kind_from_string,
                                                                 "node kind"),
                                            string_field(n, "label"), int_field(n, "line"), int_field(n, "depth")});
        }
        for (const Json& e : array_field(g, "edges")) {
            graph.edges.push_back(GraphEdge{string_field(e, "from"), string_field(e, "to"),
                                            parse_enum<EdgeKind>(string_field(e, "kind"), edge_kind_from_string,
                                                                 "edge kind"),
                                            int_field(e, "line"), string_field(e, "label")});
        }
        report.graphs.push_back(std::move(graph));
    }
    for (const Json& w : array_field(root, "warnings")) {
        Warning warning;
        warning.detector = parse_enum<DetectorId>(string_field(w, "detector"), detector_from_string, "detector");
        warning.category = string_field(w, "category");
        warning.severity = parse_enum<Severity>(string_field(w, "severity"), severity_from_string, "severity");
        warning.contract = string_field(w, "contract");
        const Json& function = field(w, "function");
        if (function.is_string()) {
            warning.function = function.get<std::string>();
        } else if (!function.is_null()) {
            throw ReportFormatError("key 'function' must be a string or null");
        }
        warning.line = int_field(w, "line");
        warning.message = string_field(w, "message");
        warning.related_symbols = string_list(w, "related_symbols");
        warning.related_nodes = string_list(w, "related_nodes");
        report.warnings.push_back(std::move(warning));
    }
    for (const Json& d : array_field(root, "diagnostics")) {
        report.diagnostics.push_back(ParseDiagnostic{
            int_field(d, "line"),
            parse_enum<DiagnosticSeverity>(string_field(d, "severity"), diagnostic_severity_from_string, "severity"),
            string_field(d, "message")});
    }
    return report;
}

int exit_code(const AuditReport& report, FailOn fail_on)
{
    switch (fail_on) {
    case FailOn::None:
        return 0;
    case FailOn::Warning:
        return report.warnings.empty() ? 0 : 1;
    case FailOn::High:
        return std::any_of(report.warnings.begin(), report.warnings.end(),
                           [](const Warning& w) { return w.severity == Severity::High; })
                   ? 1
                   : 0;
    }
    return 0;
}

}  // namespace smartgraph
