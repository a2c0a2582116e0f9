/**
 * @file detectors.hpp
 * @brief Heuristic detector catalog D1 to D12 and the run_all orchestrator.
 *
 * Detectors are pure functions over resolved models. Their warnings are
 * heuristic alerts meant for human triage, not proofs of exploitability.
 */

#pragma once

#include "smartgraph/keyword_config.hpp"
#include "smartgraph/model.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace smartgraph {

enum class DetectorId {
    D1_stake_asymmetry,
    D2_missing_exit_validation,
    D3_unprotected_entry,
    D4_price_lag,
    D5_external_dependency,
    D6_supply_hooks,
    D7_complex_calculation,
    D8_unchecked_low_level,
    D9_naming_ambiguity,
    D10_legacy_signature,
    D11_collateral_logic,
    D12_point_system,
};

enum class Severity { Info, Medium, High };

inline constexpr DetectorId kAllDetectors[] = {
    DetectorId::D1_stake_asymmetry,     DetectorId::D2_missing_exit_validation, DetectorId::D3_unprotected_entry,
    DetectorId::D4_price_lag,           DetectorId::D5_external_dependency,     DetectorId::D6_supply_hooks,
    DetectorId::D7_complex_calculation, DetectorId::D8_unchecked_low_level,     DetectorId::D9_naming_ambiguity,
    DetectorId::D10_legacy_signature,   DetectorId::D11_collateral_logic,       DetectorId::D12_point_system,
};

[[nodiscard]] std::string_view to_string(DetectorId id);
[[nodiscard]] std::string_view to_string(Severity severity);
[[nodiscard]] std::optional<DetectorId> detector_from_string(std::string_view text);
[[nodiscard]] std::optional<Severity> severity_from_string(std::string_view text);

/// The risk group a detector reports under.
[[nodiscard]] std::string_view category_of(DetectorId id);

struct Warning
{
    DetectorId detector = DetectorId::D1_stake_asymmetry;
    std::string category;
    Severity severity = Severity::Medium;
    std::string contract;
    std::optional<std::string> function;
    int line = 1;
    std::string message;
    std::vector<std::string> related_symbols;
    std::vector<std::string> related_nodes;

    friend bool operator==(const Warning&, const Warning&) = default;
};

enum class PairKind { Stake, Collateral, Points };

[[nodiscard]] std::vector<Warning> detect_stake_asymmetry(const ContractDef& contract, const KeywordConfig& cfg,
                                                          PairKind pair_kind);
[[nodiscard]] std::vector<Warning> detect_missing_exit_validation(const ContractDef& contract,
                                                                  const KeywordConfig& cfg);
/// `unit` supplies the parents and children whose call sites count as internal invocations.
[[nodiscard]] std::vector<Warning> detect_unprotected_entry(const SourceUnit& unit, const ContractDef& contract);
[[nodiscard]] std::vector<Warning> detect_price_lag(const ContractDef& contract, const KeywordConfig& cfg);
[[nodiscard]] std::vector<Warning> detect_external_dependency(const ContractDef& contract);
[[nodiscard]] std::vector<Warning> detect_supply_hooks(const ContractDef& contract);
[[nodiscard]] std::vector<Warning> detect_complex_calculation(const ContractDef& contract, const KeywordConfig& cfg);
[[nodiscard]] std::vector<Warning> detect_unchecked_low_level(const ContractDef& contract);
[[nodiscard]] std::vector<Warning> detect_naming_ambiguity(const ContractDef& contract, const KeywordConfig& cfg);
[[nodiscard]] std::vector<Warning> detect_legacy_signature_mismatch(const SourceUnit& current,
                                                                    const SourceUnit& baseline,
                                                                    const KeywordConfig& cfg);

/// Statements strictly between two flattened statement positions; 0 within one statement.
[[nodiscard]] int statement_distance(std::size_t a, std::size_t b);

/// Levenshtein distance.
[[nodiscard]] int edit_distance(std::string_view a, std::string_view b);

/// Accepts full ids ("D4_price_lag") or the short form ("D4"). Throws ConfigError on unknown ids.
[[nodiscard]] std::set<DetectorId> parse_detector_ids(const std::vector<std::string>& names);

/**
 * Runs the enabled detectors over every contract of `unit` and returns the
 * warnings sorted by (contract, line, detector, function, message). D10 runs
 * only when `baseline` is given. related_nodes are restricted to ids present
 * in the contract's dependency graph.
 */
[[nodiscard]] std::vector<Warning> run_all(const SourceUnit& unit, const KeywordConfig& cfg,
                                           const SourceUnit* baseline, const std::set<DetectorId>& enabled);

/// Sort order used by run_all and the reports.
[[nodiscard]] bool warning_less(const Warning& a, const Warning& b);

}  // namespace smartgraph
