#include "smartgraph/keyword_config.hpp"

#include "syntax.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace smartgraph {

namespace {

std::string_view trim(std::string_view text)
{
    const auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!text.empty() && is_ws(text.front())) {
        text.remove_prefix(1);
    }
    while (!text.empty() && is_ws(text.back())) {
        text.remove_suffix(1);
    }
    return text;
}

std::vector<std::string_view> split(std::string_view text, char separator)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t at = text.find(separator, start);
        parts.push_back(trim(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
        if (at == std::string_view::npos) {
            break;
        }
        start = at + 1;
    }
    return parts;
}

std::string where(int line)
{
    return "config line " + std::to_string(line) + ": ";
}

std::vector<std::string> parse_list(std::string_view value, int line)
{
    std::vector<std::string> out;
    for (std::string_view item : split(value, ',')) {
        if (item.empty()) {
            throw ConfigError(where(line) + "empty keyword in list");
        }
        out.push_back(syntax::to_lower(item));
    }
    return out;
}

std::vector<KeywordPair> parse_pairs(std::string_view value, int line)
{
    std::vector<KeywordPair> out;
    for (std::string_view pair : split(value, ';')) {
        if (pair.empty()) {
            continue;
        }
        const std::vector<std::string_view> sides = split(pair, '|');
        if (sides.size() != 2) {
            throw ConfigError(where(line) + "pair must have the form entries|exits");
        }
        out.push_back(KeywordPair{parse_list(sides[0], line), parse_list(sides[1], line)});
    }
    if (out.empty()) {
        throw ConfigError(where(line) + "pair list is empty");
    }
    return out;
}

int parse_int(std::string_view value, int line)
{
    int out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError(where(line) + "expected an integer, got '" + std::string(value) + "'");
    }
    return out;
}

void check_list(const std::vector<std::string>& list, std::string_view key)
{
    if (list.empty()) {
        throw ConfigError(std::string(key) + " must not be empty");
    }
    for (const std::string& entry : list) {
        if (entry.empty() || entry != syntax::to_lower(entry)) {
            throw ConfigError(std::string(key) + " entries must be non-empty lowercase strings");
        }
    }
}

}  // namespace

void validate(const KeywordConfig& config)
{
    check_list(config.stake_names, "stake_names");
    check_list(config.unstake_names, "unstake_names");
    check_list(config.exit_names, "exit_names");
    check_list(config.price_names, "price_names");
    check_list(config.transfer_names, "transfer_names");
    for (const KeywordPair& pair : config.earn_spend_pairs) {
        check_list(pair.entries, "earn_spend_pairs");
        check_list(pair.exits, "earn_spend_pairs");
    }
    for (const KeywordPair& pair : config.collateral_pairs) {
        check_list(pair.entries, "collateral_pairs");
        check_list(pair.exits, "collateral_pairs");
    }
    if (config.max_distance < 1) {
        throw ConfigError("max_distance must be at least 1");
    }
    if (config.complexity_threshold < 2) {
        throw ConfigError("complexity_threshold must be at least 2");
    }
    if (config.similarity_threshold < 0) {
        throw ConfigError("similarity_threshold must not be negative");
    }
}

KeywordConfig parse_keyword_config(std::string_view text, KeywordConfig base)
{
    int line_no = 0;
    for (std::string_view raw : split(text, '\n')) {
        ++line_no;
        std::string_view line = raw;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(where(line_no) + "expected 'key = value'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key == "stake_names") {
            base.stake_names = parse_list(value, line_no);
        } else if (key == "unstake_names") {
            base.unstake_names = parse_list(value, line_no);
        } else if (key == "exit_names") {
            base.exit_names = parse_list(value, line_no);
        } else if (key == "price_names") {
            base.price_names = parse_list(value, line_no);
        } else if (key == "transfer_names") {
            base.transfer_names = parse_list(value, line_no);
        } else if (key == "earn_spend_pairs") {
            base.earn_spend_pairs = parse_pairs(value, line_no);
        } else if (key == "collateral_pairs") {
            base.collateral_pairs = parse_pairs(value, line_no);
        } else if (key == "max_distance") {
            base.max_distance = parse_int(value, line_no);
        } else if (key == "similarity_threshold") {
            base.similarity_threshold = parse_int(value, line_no);
        } else if (key == "complexity_threshold") {
            base.complexity_threshold = parse_int(value, line_no);
        } else {
            throw ConfigError(where(line_no) + "unknown key '" + std::string(key) + "'");
        }
    }
    validate(base);
    return base;
}

KeywordConfig load_keyword_config(const std::filesystem::path& path, KeywordConfig base)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_keyword_config(buffer.str(), std::move(base));
}

bool matches_any(std::string_view name, const std::vector<std::string>& keywords)
{
    const std::string lower = syntax::to_lower(name);
    for (const std::string& keyword : keywords) {
        if (lower.find(keyword) != std::string::npos) {
            return true;
        }
    }
    return false;
}

}  // namespace smartgraph
