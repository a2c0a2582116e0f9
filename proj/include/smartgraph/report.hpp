/**
 * @file report.hpp
 * @brief Audit report assembly and its text / JSON serializations.
 */

#pragma once

#include "smartgraph/detectors.hpp"
#include "smartgraph/graph.hpp"
#include "smartgraph/model.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smartgraph {

inline constexpr std::string_view kToolVersion = "1.0.0";

struct ContractSummary
{
    std::string name;
    ContractKind kind = ContractKind::Contract;
    int functions = 0;
    int state_vars = 0;
    int events = 0;

    friend bool operator==(const ContractSummary&, const ContractSummary&) = default;
};

struct AuditReport
{
    std::string tool_version{kToolVersion};
    std::string source_path;
    std::optional<std::string> generated_at;  // only with --timestamps
    std::vector<ContractSummary> contracts;
    std::vector<DependencyGraph> graphs;
    std::vector<Warning> warnings;
    std::vector<ParseDiagnostic> diagnostics;

    friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

/// Thrown by deserialize_json on input that does not follow the report schema.
class ReportFormatError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class FailOn { None, Warning, High };

[[nodiscard]] std::string_view to_string(FailOn policy);
[[nodiscard]] std::optional<FailOn> fail_on_from_string(std::string_view text);

/// Builds graphs and summaries for `unit`; warnings are re-sorted.
[[nodiscard]] AuditReport make_report(const SourceUnit& unit, std::vector<Warning> warnings,
                                      std::optional<std::string> generated_at = std::nullopt);

[[nodiscard]] std::string render_text(const AuditReport& report, bool color);

/// Pretty-printed JSON, fixed key order, LF line endings, trailing newline.
[[nodiscard]] std::string serialize_json(const AuditReport& report);
[[nodiscard]] AuditReport deserialize_json(std::string_view text);

/// 1 when the warnings trigger `fail_on`, else 0. Exit code 2 is the CLI's business.
[[nodiscard]] int exit_code(const AuditReport& report, FailOn fail_on);

}  // namespace smartgraph
