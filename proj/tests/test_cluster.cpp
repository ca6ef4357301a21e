#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "uigkit/cluster.hpp"
#include "uigkit/graph.hpp"
#include "uigkit/scc.hpp"

using namespace uigkit;

namespace {

// Independent component check: u and v share a component iff each
// reaches the other. Quadratic BFS closure, good enough for tiny n.
std::vector<std::vector<bool>> reachability(const scc::Adjacency& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::uint32_t> stack = {static_cast<std::uint32_t>(s)};
        reach[s][s] = true;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto v : g[u])
                if (!reach[s][v]) {
                    reach[s][v] = true;
                    stack.push_back(v);
                }
        }
    }
    return reach;
}

bool same_partition(const scc::Adjacency& g, const std::vector<std::uint32_t>& ids) {
    auto reach = reachability(g);
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = 0; v < g.size(); ++v) {
            bool together = reach[u][v] && reach[v][u];
            if (together != (ids[u] == ids[v]))
                return false;
        }
    return true;
}

scc::Adjacency random_digraph(std::mt19937& rng, std::size_t max_n) {
    std::uniform_int_distribution<std::size_t> size_dist(0, max_n);
    std::size_t n = size_dist(rng);
    scc::Adjacency g(n);
    if (n == 0)
        return g;
    std::uniform_real_distribution<double> p_dist(0.05, 0.75);
    double p = p_dist(rng);
    std::bernoulli_distribution edge(p);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && edge(rng))
                g[u].push_back(static_cast<std::uint32_t>(v));
    return g;
}

UserInteractionGraph graph_of(const std::vector<std::pair<std::string, std::string>>& edges,
                              const std::vector<std::uint32_t>& weights = {}) {
    UserInteractionGraph g;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::uint32_t w = weights.empty() ? 1 : weights[i];
        for (std::uint32_t k = 0; k < w; ++k)
            g.add_interaction(edges[i].first, edges[i].second);
    }
    return g;
}

std::set<std::string> as_set(const std::vector<std::string>& names) {
    return {names.begin(), names.end()};
}

} // namespace

TEST_CASE("tie score matches the worked example") {
    CHECK(tie_score(3, 7) == doctest::Approx(6.25).epsilon(1e-12));
    CHECK(tie_score(7, 3) == doctest::Approx(6.25).epsilon(1e-12));
    CHECK(tie_score(5, 5) == doctest::Approx(25.0).epsilon(1e-12));   // diff clamps to 1
    CHECK(tie_score(4, 0) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(tie_score(12, 2) == doctest::Approx(3.5).epsilon(1e-12));
    CHECK(tie_score(3, 7, 0.8) == doctest::Approx(3.125).epsilon(1e-12));
}

TEST_CASE("tie score is symmetric under argument swap") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::uint64_t> counts(0, 10000);
    for (int i = 0; i < 1000; ++i) {
        auto a = counts(rng);
        auto b = counts(rng);
        auto s1 = tie_score(a, b);
        auto s2 = tie_score(b, a);
        CHECK(std::abs(s1 - s2) <= 1e-12 * std::max(1.0, std::abs(s1)));
    }
}

TEST_CASE("SCCs match a reachability oracle on random digraphs") {
    std::mt19937 rng(20220101);
    for (int trial = 0; trial < 2000; ++trial) {
        auto g = random_digraph(rng, 10);
        std::size_t count = 0;
        auto ids = scc::component_ids(g, count);
        REQUIRE(ids.size() == g.size());
        if (!g.empty()) {
            std::set<std::uint32_t> distinct(ids.begin(), ids.end());
            CHECK(distinct.size() == count);
        }
        CHECK(same_partition(g, ids));
    }
}

TEST_CASE("SCC handles hand-built shapes") {
    // 0 -> 1 -> 2 -> 0 cycle plus a tail 2 -> 3.
    scc::Adjacency g = {{1}, {2}, {0, 3}, {}};
    auto comps = scc::components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(comps[1] == std::vector<std::uint32_t>{3});

    scc::Adjacency empty;
    std::size_t count = 99;
    CHECK(scc::component_ids(empty, count).empty());
    CHECK(count == 0);
}

TEST_CASE("SCC survives a hundred-thousand-node cycle") {
    // An explicit-stack implementation must not blow the call stack.
    const std::uint32_t n = 100000;
    scc::Adjacency g(n);
    for (std::uint32_t i = 0; i < n; ++i)
        g[i].push_back((i + 1) % n);
    std::size_t count = 0;
    auto ids = scc::component_ids(g, count);
    CHECK(count == 1);
    CHECK(ids[0] == ids[n - 1]);
}

TEST_CASE("CTUP pairs need the threshold in at least one direction") {
    ClusterConfig cfg; // threshold 3, coeff 0.4
    auto g = graph_of({{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "c"}},
                      {2, 2, 3, 1});
    auto pairs = ctup_pairs(g, cfg);
    REQUIRE(pairs.size() == 1); // (a,b) peaks at 2 < 3; (c,d) reaches 3
    CHECK(pairs[0].user_i == "c");
    CHECK(pairs[0].user_j == "d");
    CHECK(pairs[0].c_ij == 3);
    CHECK(pairs[0].c_ji == 1);
    CHECK(pairs[0].tie_score == doctest::Approx(5.0));
}

TEST_CASE("CTUP pairs are canonical, deduplicated and never self-loops") {
    auto g = graph_of({{"zed", "abe"}, {"abe", "zed"}, {"solo", "solo"}}, {7, 3, 9});
    auto pairs = ctup_pairs(g, {});
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].user_i == "abe"); // canonical: user_i < user_j
    CHECK(pairs[0].user_j == "zed");
    CHECK(pairs[0].c_ij == 3); // c_ij counts abe -> zed
    CHECK(pairs[0].c_ji == 7);
    CHECK(pairs[0].tie_score == doctest::Approx(6.25));
}

TEST_CASE("CTUP ordering is descending with exact tie handling") {
    // (2,6) and (1,3) both score exactly 5.0; order falls back to names.
    auto g = graph_of({{"m", "n"}, {"n", "m"}, {"a", "b"}, {"b", "a"}, {"x", "y"}},
                      {2, 6, 1, 3, 4});
    auto pairs = ctup_pairs(g, {});
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0].user_i == "a"); // 5.0, name tie-break before (m,n)
    CHECK(pairs[1].user_i == "m"); // 5.0
    CHECK(pairs[2].user_i == "x"); // (4,0) -> 2.5
    CHECK(pairs[0].tie_score == doctest::Approx(5.0));
    CHECK(pairs[2].tie_score == doctest::Approx(2.5));
}

TEST_CASE("weak clusters are the SCCs of the full graph") {
    // Cycle of four users; a reciprocal pair; an isolated commenter.
    auto g = graph_of({{"u1", "u2"}, {"u2", "u3"}, {"u3", "u4"}, {"u4", "u1"},
                       {"p", "q"}, {"q", "p"}, {"lone", "u1"}});
    auto wc = weak_clusters(g);
    CHECK(wc.kind == ClusterKind::WC);
    REQUIRE(wc.clusters.size() == 2);
    CHECK(wc.clusters[0] == std::vector<std::string>{"u1", "u2", "u3", "u4"});
    CHECK(wc.clusters[1] == std::vector<std::string>{"p", "q"});
    CHECK(wc.unclustered == std::vector<std::string>{"lone"});
}

TEST_CASE("strong clusters keep only closely tied edges") {
    // u-cycle edges all weight 1: a WC but no pair qualifies.
    // p<->q is reciprocal at 4/5: qualifies both ways -> SC.
    // r->s 9, s->r 0: pair qualifies but only one direction exists.
    auto g = graph_of({{"u1", "u2"}, {"u2", "u3"}, {"u3", "u1"},
                       {"p", "q"}, {"q", "p"}, {"r", "s"}},
                      {1, 1, 1, 4, 5, 9});
    auto sc = strong_clusters(g);
    CHECK(sc.kind == ClusterKind::SC);
    REQUIRE(sc.clusters.size() == 1);
    CHECK(sc.clusters[0] == std::vector<std::string>{"p", "q"});
    auto wc = weak_clusters(g);
    REQUIRE(wc.clusters.size() == 2); // the cycle and the pair
}

TEST_CASE("clusters sort by size, then first member; members sort") {
    auto g = graph_of({{"z", "y"}, {"y", "z"},
                       {"b", "a"}, {"a", "b"},
                       {"m1", "m2"}, {"m2", "m3"}, {"m3", "m1"}});
    auto wc = weak_clusters(g);
    REQUIRE(wc.clusters.size() == 3);
    CHECK(wc.clusters[0] == std::vector<std::string>{"m1", "m2", "m3"});
    CHECK(wc.clusters[1] == std::vector<std::string>{"a", "b"}); // size tie: first member
    CHECK(wc.clusters[2] == std::vector<std::string>{"y", "z"});
}

TEST_CASE("min_cluster_size moves small SCCs to unclustered") {
    ClusterConfig cfg;
    cfg.min_cluster_size = 3;
    auto g = graph_of({{"a", "b"}, {"b", "a"}, {"m1", "m2"}, {"m2", "m3"}, {"m3", "m1"}});
    auto wc = weak_clusters(g, cfg);
    REQUIRE(wc.clusters.size() == 1);
    CHECK(wc.clusters[0].size() == 3);
    CHECK(as_set(wc.unclustered) == std::set<std::string>{"a", "b"});
}

TEST_CASE("every strong cluster refines some weak cluster") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> n_dist(2, 12);
    std::uniform_int_distribution<int> w_dist(0, 6);
    for (int trial = 0; trial < 300; ++trial) {
        int n = n_dist(rng);
        UserInteractionGraph g;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v)
                    continue;
                int w = w_dist(rng) - 2; // mostly sparse
                for (int k = 0; k < w; ++k)
                    g.add_interaction("user" + std::to_string(u),
                                      "user" + std::to_string(v));
            }
        if (g.empty())
            continue;
        auto wc = weak_clusters(g);
        auto sc = strong_clusters(g);
        for (const auto& strong : sc.clusters) {
            auto strong_set = as_set(strong);
            bool contained = false;
            for (const auto& weak : wc.clusters) {
                auto weak_set = as_set(weak);
                bool subset = true;
                for (const auto& name : strong_set)
                    if (!weak_set.count(name)) {
                        subset = false;
                        break;
                    }
                if (subset) {
                    contained = true;
                    break;
                }
            }
            CHECK(contained);
        }
        // Membership bookkeeping: clusters + unclustered == all nodes.
        std::size_t wc_members = wc.unclustered.size();
        for (const auto& c : wc.clusters)
            wc_members += c.size();
        CHECK(wc_members == g.node_count());
    }
}

TEST_CASE("census recounts histograms and shares") {
    auto g = graph_of({{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "c"},
                       {"m1", "m2"}, {"m2", "m3"}, {"m3", "m1"}, {"x", "a"}},
                      {4, 5, 1, 1, 1, 1, 1, 1});
    auto wc = weak_clusters(g);
    auto sc = strong_clusters(g);
    auto census = cluster_census(wc, sc, 16);
    CHECK(census.wc_count == 3);
    CHECK(census.sc_count == 1);
    CHECK(census.largest_wc == 3);
    CHECK(census.largest_sc == 2);
    CHECK(census.unclustered_count == 1); // x
    CHECK(census.graph_nodes == 8);
    CHECK(census.active_users == 16);
    CHECK(census.size_histogram.at(2).first == 2);  // two weak pairs
    CHECK(census.size_histogram.at(2).second == 1); // one strong pair
    CHECK(census.size_histogram.at(3).first == 1);
    CHECK(census.size_histogram.at(3).second == 0);
    CHECK(census.largest_wc_active_share == doctest::Approx(3.0 / 16.0));
    CHECK(census.unclustered_active_share == doctest::Approx(1.0 / 16.0));
}

TEST_CASE("tie pair CSV uses four-decimal scores") {
    auto g = graph_of({{"a", "b"}, {"b", "a"}}, {3, 7});
    auto pairs = ctup_pairs(g, {});
    std::ostringstream out;
    write_tiepairs_csv(out, pairs);
    CHECK(out.str() ==
          "user_i,user_j,c_ij,c_ji,tie_score\n"
          "a,b,3,7,6.2500\n");
}

TEST_CASE("empty graphs yield empty cluster sets") {
    UserInteractionGraph g;
    auto wc = weak_clusters(g);
    CHECK(wc.clusters.empty());
    CHECK(wc.unclustered.empty());
    CHECK(ctup_pairs(g, {}).empty());
    auto census = cluster_census(wc, strong_clusters(g), 0);
    CHECK(census.wc_count == 0);
    CHECK(census.largest_wc_active_share == 0.0);
}
