#include "corpus.hpp"
#include "generators.hpp"

#include "smartgraph/detectors.hpp"
#include "smartgraph/frontend.hpp"
#include "smartgraph/graph.hpp"
#include "smartgraph/report.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>
#include <rapidjson/document.h>
#include <rapidjson/schema.h>
#include <rapidjson/stringbuffer.h>

#include <map>
#include <random>

using namespace smartgraph;
using namespace testsupport;
using Json = nlohmann::ordered_json;

namespace {

class SchemaChecker
{
public:
    explicit SchemaChecker(const fs::path& path)
    {
        rapidjson::Document doc;
        const std::string text = read_text(path);
        doc.Parse(text.c_str());
        if (doc.HasParseError()) {
            throw std::runtime_error("schema does not parse: " + path.string());
        }
        schema_ = std::make_unique<rapidjson::SchemaDocument>(doc);
        raw_ = Json::parse(text);
    }

    // Empty string when valid, otherwise the failing keyword and location.
    std::string check(const std::string& instance) const
    {
        rapidjson::Document doc;
        doc.Parse(instance.c_str());
        if (doc.HasParseError()) {
            return "instance does not parse";
        }
        rapidjson::SchemaValidator validator(*schema_);
        if (doc.Accept(validator)) {
            return "";
        }
        rapidjson::StringBuffer where;
        validator.GetInvalidDocumentPointer().StringifyUriFragment(where);
        return std::string(validator.GetInvalidSchemaKeyword()) + " at " + where.GetString();
    }

    const Json& raw() const { return raw_; }

private:
    std::unique_ptr<rapidjson::SchemaDocument> schema_;
    Json raw_;
};

const SchemaChecker& report_schema()
{
    static const SchemaChecker checker(schema_dir() / "report.schema.json");
    return checker;
}

const SchemaChecker& session_schema()
{
    static const SchemaChecker checker(schema_dir() / "session.schema.json");
    return checker;
}

std::set<std::string> enum_of(const Json& schema, const char* definition, const char* property)
{
    const Json& node = property ? schema["definitions"][definition]["properties"][property] : schema["definitions"][definition];
    return node["enum"].get<std::set<std::string>>();
}

struct Metrics
{
    int total = 0;
    int confirmed = 0;
    int false_positive = 0;
    int needs_info = 0;
    int unreviewed = 0;
};

// Session semantics: latest verdict per index wins; metrics are derived.
Metrics recompute(const Json& session, std::size_t warning_count)
{
    std::map<int, std::string> latest;
    for (const Json& v : session["verdicts"]) {
        latest[v["warning_index"].get<int>()] = v["verdict"].get<std::string>();
    }
    Metrics m;
    m.total = static_cast<int>(warning_count);
    for (const auto& [index, verdict] : latest) {
        m.confirmed += verdict == "confirmed" ? 1 : 0;
        m.false_positive += verdict == "false_positive" ? 1 : 0;
        m.needs_info += verdict == "needs_info" ? 1 : 0;
    }
    m.unreviewed = m.total - static_cast<int>(latest.size());
    return m;
}

}  // namespace

TEST(ReportSchema, CorpusReportsValidate)
{
    for (const auto& fixture : corpus_fixtures()) {
        const std::string text = serialize_json(analyze_fixture(fixture).report);
        EXPECT_EQ(report_schema().check(text), "") << fixture;
    }
    const AuditReport stamped = make_report(load_source("contract A {}", "a.sol"), {}, "2026-10-16T08:00:00Z");
    EXPECT_EQ(report_schema().check(serialize_json(stamped)), "");
}

TEST(ReportSchema, RandomInputReportsValidate)
{
    std::mt19937 rng(31337);
    const std::set<DetectorId> all(std::begin(kAllDetectors), std::end(kAllDetectors));
    for (int i = 0; i < 300; ++i) {
        const std::string src = i % 2 == 0 ? random_soup(rng, 300) : random_stake_contract(rng).source;
        const SourceUnit unit = load_source(src, "r.sol");
        const std::string text = serialize_json(make_report(unit, run_all(unit, {}, nullptr, all)));
        ASSERT_EQ(report_schema().check(text), "") << src;
    }
}

TEST(ReportSchema, RejectsMalformedReports)
{
    const Json good = Json::parse(serialize_json(analyze_fixture(corpus_dir() / "syfi_rebase.sol").report));
    ASSERT_EQ(report_schema().check(good.dump()), "");
    const std::vector<std::pair<std::string, std::function<void(Json&)>>> edits = {
        {"missing warnings", [](Json& j) { j.erase("warnings"); }},
        {"extra key", [](Json& j) { j["extra"] = 1; }},
        {"bad version", [](Json& j) { j["version"] = "v1"; }},
        {"unknown detector", [](Json& j) { j["warnings"][0]["detector"] = "D13_unknown"; }},
        {"ordinal detector", [](Json& j) { j["warnings"][0]["detector"] = 4; }},
        {"bad severity", [](Json& j) { j["warnings"][0]["severity"] = "critical"; }},
        {"negative line", [](Json& j) { j["warnings"][0]["line"] = -1; }},
        {"numeric function", [](Json& j) { j["warnings"][0]["function"] = 3; }},
        {"unknown node kind", [](Json& j) { j["graphs"][0]["nodes"][0]["kind"] = "widget"; }},
        {"edge without target", [](Json& j) { j["graphs"].back()["edges"][0].erase("to"); }},
        {"contract count as string", [](Json& j) { j["contracts"][0]["functions"] = "3"; }},
    };
    for (const auto& [name, edit] : edits) {
        Json bad = good;
        edit(bad);
        EXPECT_NE(report_schema().check(bad.dump()), "") << name;
    }
}

TEST(ReportSchema, EnumsMatchTheImplementation)
{
    const Json& s = report_schema().raw();
    std::set<std::string> detectors;
    for (DetectorId id : kAllDetectors) {
        detectors.insert(std::string(to_string(id)));
    }
    EXPECT_EQ(s["definitions"]["detector_id"]["enum"].get<std::set<std::string>>(), detectors);

    for (const std::string& kind : enum_of(s, "node", "kind")) {
        EXPECT_TRUE(node_kind_from_string(kind).has_value()) << kind;
    }
    for (const std::string& kind : enum_of(s, "edge", "kind")) {
        EXPECT_TRUE(edge_kind_from_string(kind).has_value()) << kind;
    }
    for (const std::string& kind : enum_of(s, "contract", "kind")) {
        EXPECT_TRUE(contract_kind_from_string(kind).has_value()) << kind;
    }
    // Every kind the corpus actually produces is listed.
    std::set<std::string> node_kinds;
    std::set<std::string> edge_kinds;
    for (const auto& fixture : corpus_fixtures()) {
        for (const DependencyGraph& g : analyze_fixture(fixture).report.graphs) {
            for (const GraphNode& n : g.nodes) {
                node_kinds.insert(std::string(to_string(n.kind)));
            }
            for (const GraphEdge& e : g.edges) {
                edge_kinds.insert(std::string(to_string(e.kind)));
            }
        }
    }
    EXPECT_TRUE(std::includes(enum_of(s, "node", "kind").begin(), enum_of(s, "node", "kind").end(), node_kinds.begin(),
                              node_kinds.end()));
    EXPECT_EQ(enum_of(s, "node", "kind").size(), 10u);
    EXPECT_EQ(enum_of(s, "edge", "kind").size(), 8u);
    EXPECT_TRUE(std::includes(enum_of(s, "edge", "kind").begin(), enum_of(s, "edge", "kind").end(), edge_kinds.begin(),
                              edge_kinds.end()));
}

TEST(SessionSchema, SampleSessionMatchesItsReport)
{
    const std::string text = read_text(expected_dir() / "syfi_session.json");
    ASSERT_EQ(session_schema().check(text), "");
    const Json session = Json::parse(text);
    const AuditReport report = analyze_fixture(corpus_dir() / "syfi_rebase.sol").report;

    EXPECT_EQ(fs::path(report.source_path).filename().string(), session["report_source"].get<std::string>());
    EXPECT_EQ(report.tool_version, session["report_version"].get<std::string>());
    for (const Json& v : session["verdicts"]) {
        const auto index = v["warning_index"].get<std::size_t>();
        ASSERT_LT(index, report.warnings.size());
        EXPECT_EQ(v["detector"].get<std::string>(), to_string(report.warnings[index].detector));
    }
    const Metrics m = recompute(session, report.warnings.size());
    const Json& stored = session["metrics"];
    EXPECT_EQ(stored["total"], m.total);
    EXPECT_EQ(stored["confirmed"], 2);
    EXPECT_EQ(stored["confirmed"], m.confirmed);
    EXPECT_EQ(stored["false_positive"], m.false_positive);
    EXPECT_EQ(stored["needs_info"], m.needs_info);
    EXPECT_EQ(stored["unreviewed"], m.unreviewed);
}

TEST(SessionSchema, MetricsIdentityUnderReentry)
{
    Json session = Json::parse(read_text(expected_dir() / "syfi_session.json"));
    session["verdicts"].push_back(Json{{"warning_index", 0},
                                       {"detector", "D4_price_lag"},
                                       {"verdict", "false_positive"},
                                       {"note", ""},
                                       {"reviewer", "auditor-2"}});
    const Metrics m = recompute(session, 2);
    EXPECT_EQ(m.confirmed, 1);
    EXPECT_EQ(m.false_positive, 1);
    EXPECT_EQ(m.confirmed + m.false_positive + m.needs_info + m.unreviewed, m.total);

    Json empty = session;
    empty["verdicts"] = Json::array();
    empty["metrics"] = Json{{"total", 2}, {"confirmed", 0}, {"false_positive", 0}, {"needs_info", 0}, {"unreviewed", 2}};
    EXPECT_EQ(session_schema().check(empty.dump()), "");
    EXPECT_EQ(recompute(empty, 2).unreviewed, 2);
}

TEST(SessionSchema, RejectsMalformedSessions)
{
    const Json good = Json::parse(read_text(expected_dir() / "syfi_session.json"));
    const std::vector<std::pair<std::string, std::function<void(Json&)>>> edits = {
        {"missing metrics", [](Json& j) { j.erase("metrics"); }},
        {"unknown verdict", [](Json& j) { j["verdicts"][0]["verdict"] = "maybe"; }},
        {"negative index", [](Json& j) { j["verdicts"][0]["warning_index"] = -1; }},
        {"ordinal detector", [](Json& j) { j["verdicts"][0]["detector"] = 4; }},
        {"bad detector id", [](Json& j) { j["verdicts"][0]["detector"] = "D13_x"; }},
        {"fractional count", [](Json& j) { j["metrics"]["confirmed"] = 1.5; }},
        {"extra key", [](Json& j) { j["report"] = Json::object(); }},
    };
    for (const auto& [name, edit] : edits) {
        Json bad = good;
        edit(bad);
        EXPECT_NE(session_schema().check(bad.dump()), "") << name;
    }
}
