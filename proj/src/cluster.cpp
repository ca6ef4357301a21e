#include "uigkit/cluster.hpp"

#include <algorithm>
#include <cstdio>

#include "uigkit/csv.hpp"
#include "uigkit/scc.hpp"

namespace uigkit {

namespace {

std::uint64_t clamped_diff(std::uint64_t a, std::uint64_t b) {
    std::uint64_t diff = a > b ? a - b : b - a;
    return diff == 0 ? 1 : diff;
}

scc::Adjacency adjacency_of(const UserInteractionGraph& graph) {
    scc::Adjacency adj(graph.node_count());
    for (scc::NodeId v = 0; v < graph.node_count(); ++v) {
        adj[v].reserve(graph.out_edges(v).size());
        for (const auto& [tgt, w] : graph.out_edges(v))
            adj[v].push_back(tgt);
    }
    return adj;
}

ClusterSet clusters_from_components(const UserInteractionGraph& graph,
                                    const std::vector<std::vector<scc::NodeId>>& components,
                                    ClusterKind kind, std::size_t min_size) {
    ClusterSet set;
    set.kind = kind;
    for (const auto& comp : components) {
        if (comp.size() >= min_size) {
            std::vector<std::string> members;
            members.reserve(comp.size());
            for (auto id : comp)
                members.push_back(graph.name(id));
            std::sort(members.begin(), members.end());
            set.clusters.push_back(std::move(members));
        } else {
            for (auto id : comp)
                set.unclustered.push_back(graph.name(id));
        }
    }
    std::sort(set.clusters.begin(), set.clusters.end(),
              [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
                  if (a.size() != b.size())
                      return a.size() > b.size();
                  return a.front() < b.front();
              });
    std::sort(set.unclustered.begin(), set.unclustered.end());
    return set;
}

} // namespace

double tie_score(std::uint64_t c_ij, std::uint64_t c_ji, double diff_coefficient) {
    double sum = static_cast<double>(c_ij + c_ji);
    double diff = static_cast<double>(clamped_diff(c_ij, c_ji));
    return sum / (diff_coefficient * diff);
}

ClusterSet weak_clusters(const UserInteractionGraph& graph, const ClusterConfig& config) {
    auto comps = scc::components(adjacency_of(graph));
    return clusters_from_components(graph, comps, ClusterKind::WC, config.min_cluster_size);
}

std::vector<TiePair> ctup_pairs(const UserInteractionGraph& graph, const ClusterConfig& config) {
    using NodeId = UserInteractionGraph::NodeId;
    std::vector<TiePair> pairs;
    for (NodeId u = 0; u < graph.node_count(); ++u) {
        for (const auto& [v, w_uv] : graph.out_edges(u)) {
            if (v == u)
                continue; // self-loops never form pairs
            std::uint32_t w_vu = graph.weight(v, u);
            // visit each unordered pair once: from the smaller id, or from
            // the only endpoint that has the edge
            if (v < u && w_vu > 0)
                continue;
            if (std::max(w_uv, w_vu) < config.ctup_threshold)
                continue;
            TiePair pair;
            if (graph.name(u) < graph.name(v)) {
                pair.user_i = graph.name(u);
                pair.user_j = graph.name(v);
                pair.c_ij = w_uv;
                pair.c_ji = w_vu;
            } else {
                pair.user_i = graph.name(v);
                pair.user_j = graph.name(u);
                pair.c_ij = w_vu;
                pair.c_ji = w_uv;
            }
            pair.tie_score = tie_score(pair.c_ij, pair.c_ji, config.diff_coefficient);
            pairs.push_back(std::move(pair));
        }
    }
    // descending score; the coefficient is a common positive factor, so
    // exact ordering follows from integer cross-multiplication
    std::sort(pairs.begin(), pairs.end(), [](const TiePair& a, const TiePair& b) {
        unsigned __int128 lhs = static_cast<unsigned __int128>(a.c_ij + a.c_ji) *
                                clamped_diff(b.c_ij, b.c_ji);
        unsigned __int128 rhs = static_cast<unsigned __int128>(b.c_ij + b.c_ji) *
                                clamped_diff(a.c_ij, a.c_ji);
        if (lhs != rhs)
            return lhs > rhs;
        if (a.user_i != b.user_i)
            return a.user_i < b.user_i;
        return a.user_j < b.user_j;
    });
    return pairs;
}

ClusterSet strong_clusters(const UserInteractionGraph& graph, const ClusterConfig& config) {
    using NodeId = UserInteractionGraph::NodeId;
    scc::Adjacency restricted(graph.node_count());
    for (NodeId u = 0; u < graph.node_count(); ++u) {
        for (const auto& [v, w_uv] : graph.out_edges(u)) {
            if (v == u)
                continue;
            std::uint32_t w_vu = graph.weight(v, u);
            if (std::max(w_uv, w_vu) < config.ctup_threshold)
                continue;
            restricted[u].push_back(v);
        }
    }
    auto comps = scc::components(restricted);
    return clusters_from_components(graph, comps, ClusterKind::SC, config.min_cluster_size);
}

ClusterCensus cluster_census(const ClusterSet& weak, const ClusterSet& strong,
                             std::uint64_t active_users) {
    ClusterCensus census;
    census.active_users = active_users;
    for (const auto& cluster : weak.clusters) {
        ++census.size_histogram[cluster.size()].first;
        census.largest_wc = std::max(census.largest_wc, cluster.size());
    }
    for (const auto& cluster : strong.clusters) {
        ++census.size_histogram[cluster.size()].second;
        census.largest_sc = std::max(census.largest_sc, cluster.size());
    }
    census.wc_count = weak.clusters.size();
    census.sc_count = strong.clusters.size();
    census.unclustered_count = weak.unclustered.size();
    std::uint64_t clustered = 0;
    for (const auto& cluster : weak.clusters)
        clustered += cluster.size();
    census.graph_nodes = clustered + census.unclustered_count;
    if (active_users > 0) {
        census.largest_wc_active_share =
            static_cast<double>(census.largest_wc) / static_cast<double>(active_users);
        census.unclustered_active_share =
            static_cast<double>(census.unclustered_count) / static_cast<double>(active_users);
    }
    return census;
}

void write_tiepairs_csv(std::ostream& out, const std::vector<TiePair>& pairs) {
    csv::write_row(out, {"user_i", "user_j", "c_ij", "c_ji", "tie_score"});
    char buf[32];
    for (const auto& pair : pairs) {
        std::snprintf(buf, sizeof(buf), "%.4f", pair.tie_score);
        csv::write_row(out, {pair.user_i, pair.user_j, std::to_string(pair.c_ij),
                             std::to_string(pair.c_ji), buf});
    }
}

} // namespace uigkit
