#pragma once

#include "smartgraph/detectors.hpp"
#include "smartgraph/model.hpp"
#include "smartgraph/report.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace testsupport {

namespace fs = std::filesystem;

fs::path corpus_dir();
fs::path expected_dir();
fs::path schema_dir();

std::string read_text(const fs::path& path);

// Every .sol fixture directly inside the corpus directory, sorted by name.
std::vector<fs::path> corpus_fixtures();

// Baseline for D10 fixtures, kept under corpus/baselines with the same file name.
std::optional<fs::path> baseline_for(const fs::path& fixture);

// Lines of `<fixture>.expected`: "<detector> <contract> <function|-> <line>".
std::vector<std::string> expected_warnings(const fs::path& fixture);

// `<fixture>.writes`: "Contract.callable: a b c" per line.
std::map<std::string, std::set<std::string>> expected_writes(const fs::path& fixture);

std::string warning_key(const smartgraph::Warning& warning);
std::vector<std::string> warning_keys(const std::vector<smartgraph::Warning>& warnings);

struct Analysis
{
    smartgraph::SourceUnit unit;
    std::vector<smartgraph::Warning> warnings;
    smartgraph::AuditReport report;
};

// load_source plus run_all with all detectors, the default config and the fixture's baseline.
Analysis analyze_fixture(const fs::path& fixture);
Analysis analyze_text(const std::string& source, const std::string& path = "input.sol");

}  // namespace testsupport
