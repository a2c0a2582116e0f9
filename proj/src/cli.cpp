#include "smartgraph/cli.hpp"

#include "smartgraph/detectors.hpp"
#include "smartgraph/frontend.hpp"
#include "smartgraph/keyword_config.hpp"
#include "smartgraph/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace smartgraph {

namespace {

namespace fs = std::filesystem;

struct Options
{
    std::vector<std::string> paths;
    std::string format = "text";
    std::string out;
    std::optional<std::string> detectors;
    std::string config;
    std::string baseline;
    std::optional<int> max_distance;
    std::string fail_on = "warning";
    bool timestamps = false;
    bool no_color = false;
};

struct FileResult
{
    std::string path;
    AuditReport report;
    std::string rendered;
    bool has_errors = false;
};

std::optional<std::string> read_file(const std::string& path)
{
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) {
        return std::nullopt;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) {
            continue;
        }
        const auto last = item.find_last_not_of(" \t");
        out.push_back(item.substr(first, last - first + 1));
    }
    return out;
}

std::string extension_for(const std::string& format)
{
    if (format == "json") {
        return ".json";
    }
    if (format == "dot") {
        return ".dot";
    }
    return ".txt";
}

bool write_file(const fs::path& path, const std::string& content, std::ostream& err)
{
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) {
        err << "error: cannot write '" << path.string() << "'\n";
        return false;
    }
    return true;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color_capable)
{
    CLI::App app{"Structural dependency graphs and business-logic heuristics for Solidity contracts", "smartgraph"};
    app.require_subcommand(1);
    Options opt;
    CLI::App* analyze = app.add_subcommand("analyze", "Analyze one or more .sol files");
    analyze->add_option("paths", opt.paths, "Solidity source files")->required();
    analyze->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->capture_default_str();
    analyze->add_option("--out", opt.out, "Output file, or directory for one file per input");
    analyze->add_option("--detectors", opt.detectors, "Comma-separated detector ids (D1..D12 or full ids)");
    analyze->add_option("--config", opt.config, "Keyword configuration file");
    analyze->add_option("--baseline", opt.baseline, "Previous version of the contract for signature comparison");
    analyze->add_option("--max-distance", opt.max_distance, "Statement distance threshold for price lag");
    analyze->add_option("--fail-on", opt.fail_on, "Exit with 1 on: none, warning, high")
        ->check(CLI::IsMember({"none", "warning", "high"}))
        ->capture_default_str();
    analyze->add_flag("--timestamps", opt.timestamps, "Include generation time in JSON reports");
    analyze->add_flag("--no-color", opt.no_color, "Disable colored text output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitClean;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitClean;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help("", CLI::AppFormatMode::All);
        return kExitError;
    }

    KeywordConfig cfg;
    std::set<DetectorId> enabled(std::begin(kAllDetectors), std::end(kAllDetectors));
    std::optional<SourceUnit> baseline;
    try {
        if (!opt.config.empty()) {
            cfg = load_keyword_config(opt.config);
        }
        if (opt.max_distance) {
            cfg.max_distance = *opt.max_distance;
        }
        validate(cfg);
        if (opt.detectors) {
            enabled = parse_detector_ids(split_list(*opt.detectors));
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    if (!opt.baseline.empty()) {
        const auto text = read_file(opt.baseline);
        if (!text) {
            err << "error: cannot read baseline '" << opt.baseline << "'\n";
            return kExitError;
        }
        baseline = load_source(*text, opt.baseline);
    }

    std::vector<std::string> sources;
    for (const std::string& path : opt.paths) {
        auto text = read_file(path);
        if (!text) {
            err << "error: cannot read '" << path << "'\n";
            return kExitError;
        }
        sources.push_back(std::move(*text));
    }

    const bool color = color_capable && opt.out.empty() && !opt.no_color && std::getenv("NO_COLOR") == nullptr;
    const std::optional<std::string> generated_at =
        opt.timestamps ? std::optional<std::string>(utc_timestamp()) : std::nullopt;

    std::vector<std::future<FileResult>> tasks;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        tasks.push_back(std::async(std::launch::async, [&, i] {
            FileResult result;
            result.path = opt.paths[i];
            const SourceUnit unit = load_source(sources[i], opt.paths[i]);
            result.has_errors = unit.has_errors();
            result.report = make_report(unit, run_all(unit, cfg, baseline ? &*baseline : nullptr, enabled),
                                        generated_at);
            if (opt.format == "json") {
                result.rendered = serialize_json(result.report);
            } else if (opt.format == "dot") {
                result.rendered = export_dot(result.report.graphs);
            } else {
                result.rendered = render_text(result.report, color);
            }
            return result;
        }));
    }
    std::vector<FileResult> results;
    for (auto& task : tasks) {
        results.push_back(task.get());
    }

    int code = kExitClean;
    const FailOn policy = *fail_on_from_string(opt.fail_on);
    for (const FileResult& r : results) {
        for (const ParseDiagnostic& d : r.report.diagnostics) {
            err << r.path << ":" << d.line << ": " << to_string(d.severity) << ": " << d.message << "\n";
        }
        code = std::max(code, r.has_errors ? kExitError : exit_code(r.report, policy));
    }

    std::error_code ec;
    const bool out_is_dir =
        !opt.out.empty() && (fs::is_directory(opt.out, ec) || opt.out.back() == '/' || opt.out.back() == '\\');
    if (out_is_dir) {
        fs::create_directories(opt.out, ec);
        for (const FileResult& r : results) {
            const fs::path target = fs::path(opt.out) / (fs::path(r.path).stem().string() + extension_for(opt.format));
            if (!write_file(target, r.rendered, err)) {
                return kExitError;
            }
        }
        return code;
    }

    std::string combined;
    if (results.size() == 1) {
        combined = results.front().rendered;
    } else if (opt.format == "json") {
        nlohmann::ordered_json array = nlohmann::ordered_json::array();
        for (const FileResult& r : results) {
            array.push_back(nlohmann::ordered_json::parse(r.rendered));
        }
        combined = array.dump(2) + "\n";
    } else {
        for (const FileResult& r : results) {
            if (opt.format == "text") {
                combined += "==> " + r.path + " <==\n";
            }
            combined += r.rendered;
        }
    }
    if (opt.out.empty()) {
        out << combined;
    } else if (!write_file(opt.out, combined, err)) {
        return kExitError;
    }
    return code;
}

}  // namespace smartgraph
