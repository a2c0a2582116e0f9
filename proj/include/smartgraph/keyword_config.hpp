/**
 * @file keyword_config.hpp
 * @brief Keyword lists and thresholds that drive the heuristic detectors.
 */

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smartgraph {

/// Invalid configuration file, value or detector id. The CLI maps it to exit code 2.
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Entry-side and exit-side keyword lists checked against each other by the asymmetry detectors.
struct KeywordPair
{
    std::vector<std::string> entries;
    std::vector<std::string> exits;

    friend bool operator==(const KeywordPair&, const KeywordPair&) = default;
};

struct KeywordConfig
{
    std::vector<std::string> stake_names{"stake", "deposit", "lock", "provide"};
    std::vector<std::string> unstake_names{"unstake", "withdraw", "unlock", "release"};
    std::vector<std::string> exit_names{"withdraw", "unstake", "claim", "redeem", "transfer"};
    std::vector<std::string> price_names{"rebase", "fetchprice", "updateprice", "getrate"};
    std::vector<std::string> transfer_names{"transfer", "transferfrom", "safetransfer", "send"};
    std::vector<KeywordPair> earn_spend_pairs{{{"earn", "reward", "accrue"}, {"spend", "redeem", "claim"}}};
    std::vector<KeywordPair> collateral_pairs{{{"borrow", "lock"}, {"repay", "release"}}};
    int max_distance = 10;
    int similarity_threshold = 1;
    int complexity_threshold = 5;

    friend bool operator==(const KeywordConfig&, const KeywordConfig&) = default;
};

/// Throws ConfigError when an invariant (non-empty lowercase entries, threshold bounds) fails.
void validate(const KeywordConfig& config);

/**
 * Applies `key = value` lines on top of `base`. Lists are comma-separated;
 * pair lists use `entries|exits` with `;` between pairs. `#` starts a
 * comment. Unknown keys and malformed values throw ConfigError naming the line.
 */
[[nodiscard]] KeywordConfig parse_keyword_config(std::string_view text, KeywordConfig base = {});

[[nodiscard]] KeywordConfig load_keyword_config(const std::filesystem::path& path, KeywordConfig base = {});

/// True if `name` contains any keyword, ignoring case.
[[nodiscard]] bool matches_any(std::string_view name, const std::vector<std::string>& keywords);

}  // namespace smartgraph
