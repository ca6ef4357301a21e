#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "uigkit/errors.hpp"
#include "uigkit/graph.hpp"
#include "uigkit/graph_io.hpp"

using namespace uigkit;

namespace {

InteractionPair pair(std::string from, std::string to, std::string month = "2022-01") {
    return {std::move(from), std::move(to), std::move(month)};
}

} // namespace

TEST_CASE("a comment adds a commenter -> parent-author edge") {
    UserInteractionGraph g;
    g.add_interaction("bob", "alice");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.total_weight() == 1);
    CHECK(g.weight("bob", "alice") == 1);
    CHECK(g.weight("alice", "bob") == 0);
}

TEST_CASE("repeat comments increment the edge weight, not the edge count") {
    UserInteractionGraph g;
    g.add_interaction("bob", "alice");
    g.add_interaction("bob", "alice");
    g.add_interaction("bob", "alice");
    CHECK(g.edge_count() == 1);
    CHECK(g.weight("bob", "alice") == 3);
    CHECK(g.total_weight() == 3);
    CHECK(g.out_weight(*g.find("bob")) == 3);
    CHECK(g.in_weight(*g.find("alice")) == 3);
}

TEST_CASE("comments on comments and on posts are the same kind of edge") {
    // bob comments on alice's post; carol comments on bob's comment.
    UserInteractionGraph g;
    g.add_interaction("bob", "alice");
    g.add_interaction("carol", "bob");
    CHECK(g.weight("bob", "alice") == 1);
    CHECK(g.weight("carol", "bob") == 1);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("self-replies become self-loops feeding both degree sides") {
    UserInteractionGraph g;
    g.add_interaction("alice", "alice");
    CHECK(g.node_count() == 1);
    CHECK(g.edge_count() == 1);
    auto id = *g.find("alice");
    CHECK(g.in_weight(id) == 1);
    CHECK(g.out_weight(id) == 1);
    CHECK(degree_summary(g, id).total_weight() == 2);
}

TEST_CASE("node ids are assigned in first-appearance order") {
    UserInteractionGraph g;
    g.add_interaction("zoe", "abe");
    g.add_interaction("abe", "mia");
    CHECK(g.name(0) == "zoe");
    CHECK(g.name(1) == "abe");
    CHECK(g.name(2) == "mia");
    auto sorted = g.nodes_by_name();
    CHECK(g.name(sorted[0]) == "abe");
    CHECK(g.name(sorted[1]) == "mia");
    CHECK(g.name(sorted[2]) == "zoe");
    CHECK(!g.find("nobody").has_value());
}

TEST_CASE("build_uig aggregates pairs and honors the month filter") {
    std::vector<InteractionPair> pairs = {
        pair("bob", "alice", "2022-01"), pair("bob", "alice", "2022-01"),
        pair("carol", "alice", "2022-02"), pair("alice", "bob", "2022-02")};
    auto all = build_uig(pairs);
    CHECK(all.node_count() == 3);
    CHECK(all.total_weight() == 4);
    CHECK(all.slice_label() == "ALL");

    auto jan = build_uig(pairs, std::string("2022-01"));
    CHECK(jan.node_count() == 2);
    CHECK(jan.total_weight() == 2);
    CHECK(jan.weight("bob", "alice") == 2);
    CHECK(jan.slice_label() == "2022-01");

    auto none = build_uig(pairs, std::string("2023-12"));
    CHECK(none.empty());
}

TEST_CASE("slice_by_month produces one labeled graph per month") {
    std::vector<InteractionPair> pairs = {pair("b", "a", "2022-03"),
                                          pair("c", "a", "2022-01"),
                                          pair("b", "a", "2022-01")};
    auto slices = slice_by_month(pairs);
    REQUIRE(slices.size() == 2);
    auto it = slices.begin();
    CHECK(it->first == "2022-01");
    CHECK(it->second.total_weight() == 2);
    CHECK(it->second.slice_label() == "2022-01");
    ++it;
    CHECK(it->first == "2022-03");
    CHECK(it->second.total_weight() == 1);
}

TEST_CASE("influencer is the highest total degree, ties to the smaller name") {
    UserInteractionGraph g;
    g.add_interaction("bob", "alice");   // alice in=1
    g.add_interaction("carol", "alice"); // alice in=2, total 2
    g.add_interaction("dave", "zed");    // zed total 1
    auto top = influencer(g);
    CHECK(top.user == "alice");
    CHECK(top.in_weight == 2);
    CHECK(top.out_weight == 0);
    CHECK(top.total_weight() == 2);

    UserInteractionGraph tie;
    tie.add_interaction("zed", "mia"); // mia and zed both total 1
    auto t = influencer(tie);
    CHECK(t.user == "mia");

    UserInteractionGraph empty;
    CHECK_THROWS_AS(influencer(empty), DataError);
}

TEST_CASE("DOT export is byte-stable and escapes names") {
    UserInteractionGraph g;
    g.add_interaction("bob", "alice");
    g.add_interaction("bob", "alice");
    g.add_interaction("alice", "bob");
    g.intern("ca\"rol");
    std::string expected =
        "digraph uig {\n"
        "  \"alice\";\n"
        "  \"bob\";\n"
        "  \"ca\\\"rol\";\n"
        "  \"alice\" -> \"bob\" [label=1, weight=1];\n"
        "  \"bob\" -> \"alice\" [label=2, weight=2];\n"
        "}\n";
    CHECK(export_graph_string(g, GraphFormat::dot) == expected);
}

TEST_CASE("adjacency JSON export lists every node with sorted targets") {
    UserInteractionGraph g;
    g.add_interaction("bob", "alice");
    g.add_interaction("bob", "alice");
    g.add_interaction("alice", "bob");
    g.intern("carol");
    std::string expected =
        "{\n"
        "  \"alice\": [\n"
        "    {\n"
        "      \"target\": \"bob\",\n"
        "      \"weight\": 1\n"
        "    }\n"
        "  ],\n"
        "  \"bob\": [\n"
        "    {\n"
        "      \"target\": \"alice\",\n"
        "      \"weight\": 2\n"
        "    }\n"
        "  ],\n"
        "  \"carol\": []\n"
        "}\n";
    CHECK(export_graph_string(g, GraphFormat::adjacency_json) == expected);
}

TEST_CASE("edge CSV round-trips through import_edge_csv") {
    UserInteractionGraph g;
    g.add_interaction("bob", "alice");
    g.add_interaction("bob", "alice");
    g.add_interaction("alice", "bob");
    g.add_interaction("carol", "carol");
    auto text = export_graph_string(g, GraphFormat::edge_csv);
    CHECK(text ==
          "source,target,weight\n"
          "alice,bob,1\n"
          "bob,alice,2\n"
          "carol,carol,1\n");
    std::istringstream in(text);
    auto back = import_edge_csv(in);
    CHECK(back.node_count() == 3);
    CHECK(back.weight("bob", "alice") == 2);
    CHECK(back.weight("carol", "carol") == 1);
    CHECK(export_graph_string(back, GraphFormat::edge_csv) == text);
}

TEST_CASE("format names parse case-sensitively with aliases") {
    CHECK(graph_format_from_string("dot") == GraphFormat::dot);
    CHECK(graph_format_from_string("adjacency-json") == GraphFormat::adjacency_json);
    CHECK(graph_format_from_string("json") == GraphFormat::adjacency_json);
    CHECK(graph_format_from_string("edge-csv") == GraphFormat::edge_csv);
    CHECK(graph_format_from_string("csv") == GraphFormat::edge_csv);
    CHECK_THROWS_AS(graph_format_from_string("DOT"), UsageError);
    CHECK_THROWS_AS(graph_format_from_string("gexf"), UsageError);
}

TEST_CASE("snapshots round-trip nodes, weights and the slice label") {
    UserInteractionGraph g;
    g.add_interaction("bob", "alice");
    g.add_interaction("bob", "alice");
    g.add_interaction("écho", "bob"); // non-ASCII survives
    g.intern("isolated");
    g.set_slice_label("2022-04");

    std::stringstream buf;
    save_snapshot(buf, g);
    auto back = load_snapshot(buf);
    CHECK(back.node_count() == g.node_count());
    CHECK(back.edge_count() == g.edge_count());
    CHECK(back.total_weight() == g.total_weight());
    CHECK(back.weight("bob", "alice") == 2);
    CHECK(back.weight("écho", "bob") == 1);
    CHECK(back.find("isolated").has_value());
    CHECK(back.slice_label() == "2022-04");
    CHECK(export_graph_string(back, GraphFormat::dot) ==
          export_graph_string(g, GraphFormat::dot));
}

TEST_CASE("snapshot files survive a disk round-trip; bad magic rejects") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "uigkit_graph_test";
    fs::create_directories(dir);
    auto path = (dir / "roundtrip.snapshot").string();

    UserInteractionGraph g;
    g.add_interaction("b", "a");
    save_snapshot_file(path, g);
    auto back = load_snapshot_file(path);
    CHECK(back.weight("b", "a") == 1);

    auto bad = (dir / "bad.snapshot").string();
    std::ofstream(bad) << "not a snapshot at all";
    CHECK_THROWS_AS(load_snapshot_file(bad), DataError);
    CHECK_THROWS_AS(load_snapshot_file((dir / "missing.snapshot").string()), DataError);
    fs::remove_all(dir);
}

TEST_CASE("empty graph exports are still well-formed") {
    UserInteractionGraph g;
    CHECK(export_graph_string(g, GraphFormat::dot) == "digraph uig {\n}\n");
    CHECK(export_graph_string(g, GraphFormat::adjacency_json) == "{}\n");
    CHECK(export_graph_string(g, GraphFormat::edge_csv) == "source,target,weight\n");
    std::stringstream buf;
    save_snapshot(buf, g);
    auto back = load_snapshot(buf);
    CHECK(back.empty());
}
