#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "uigkit/errors.hpp"
#include "uigkit/ingest.hpp"
#include "uigkit/json_writer.hpp"
#include "uigkit/report.hpp"

using namespace uigkit;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("JSON writer emits stable, ordered, escaped output") {
    auto root = jsonw::Value::object();
    root.set("zeta", 1);
    root.set("alpha", "va\"l\\ue");
    root.set("pi", 3.14159);
    root.set("neg", -0.00004);
    root.set("flag", true);
    root.set("empty_obj", jsonw::Value::object());
    root.set("empty_arr", jsonw::Value::array());
    auto arr = jsonw::Value::array();
    arr.push(1);
    arr.push("two");
    root.set("mix", std::move(arr));
    CHECK(root.dump() ==
          "{\n"
          "  \"zeta\": 1,\n"
          "  \"alpha\": \"va\\\"l\\\\ue\",\n"
          "  \"pi\": 3.1416,\n"
          "  \"neg\": -0.0000,\n"
          "  \"flag\": true,\n"
          "  \"empty_obj\": {},\n"
          "  \"empty_arr\": [],\n"
          "  \"mix\": [\n"
          "    1,\n"
          "    \"two\"\n"
          "  ]\n"
          "}");
}

TEST_CASE("JSON writer escapes control bytes and passes UTF-8 through") {
    CHECK(jsonw::escape_string("tab\there") == "tab\\there");
    CHECK(jsonw::escape_string("nl\n") == "nl\\n");
    CHECK(jsonw::escape_string(std::string(1, '\x01')) == "\\u0001");
    CHECK(jsonw::escape_string("caf\xc3\xa9") == "caf\xc3\xa9");
}

TEST_CASE("the canonical config string is layout-stable") {
    RunConfig cfg;
    cfg.inputs = {"/data/deep/path/dump.csv"};
    CHECK(canonical_config_string(cfg) ==
          "concentration_ps=0.2500,0.5000\n"
          "ctup_threshold=3\n"
          "diff_coefficient=0.4000\n"
          "inputs=dump.csv\n"
          "min_cluster_size=2\n"
          "months=ALL\n"
          "top_k=10");
}

TEST_CASE("config hashes ignore directories but track options") {
    RunConfig a;
    a.inputs = {"/here/dump.csv"};
    RunConfig b;
    b.inputs = {"/elsewhere/deeper/dump.csv"};
    CHECK(config_hash(a) == config_hash(b));
    CHECK(config_hash(a).size() == 16);

    RunConfig c = a;
    c.top_k = 5;
    CHECK(config_hash(c) != config_hash(a));

    RunConfig d = a;
    d.months = {"2022-02", "2022-01", "2022-02"}; // sorted + deduped
    RunConfig e = a;
    e.months = {"2022-01", "2022-02"};
    CHECK(config_hash(d) == config_hash(e));
    CHECK(config_hash(d) != config_hash(a));

    RunConfig f = a;
    f.cluster.ctup_threshold = 4;
    CHECK(config_hash(f) != config_hash(a));
}

TEST_CASE("FNV-1a 64 matches its reference vectors") {
    CHECK(fnv1a64("") == 14695981039346656037ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("an empty record set cannot make a report") {
    RunConfig cfg;
    cfg.inputs = {"x.csv"};
    IngestReport ingest;
    CHECK_THROWS_AS(build_summary_report({}, ingest, cfg), DataError);
}

TEST_CASE("the fixture report reproduces the committed bytes") {
    const std::string data = UIGKIT_TEST_DATA;
    auto parsed = parse_records_file(data + "/fixture_dump.csv");
    auto ingest = validate_dataset(parsed.records, parsed.dropped);
    RunConfig cfg;
    cfg.inputs = {data + "/fixture_dump.csv"};
    auto report = build_summary_report(parsed.records, ingest, cfg);
    auto bytes = report.dump() + "\n";
    CHECK(bytes == slurp(data + "/expected_report.json"));
}

TEST_CASE("reports are idempotent in-process") {
    const std::string data = UIGKIT_TEST_DATA;
    auto parsed = parse_records_file(data + "/fixture_dump.csv");
    auto ingest = validate_dataset(parsed.records, parsed.dropped);
    RunConfig cfg;
    cfg.inputs = {"fixture_dump.csv"};
    auto first = build_summary_report(parsed.records, ingest, cfg).dump();
    auto second = build_summary_report(parsed.records, ingest, cfg).dump();
    CHECK(first == second);
}
