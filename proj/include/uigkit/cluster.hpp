#ifndef UIGKIT_CLUSTER_HPP
#define UIGKIT_CLUSTER_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "uigkit/graph.hpp"

namespace uigkit {

struct ClusterConfig {
    std::uint32_t ctup_threshold = 3;  // min comments in one direction
    double diff_coefficient = 0.4;
    std::size_t min_cluster_size = 2;
};

// An unordered user pair in canonical order (user_i < user_j) with both
// directional comment counts. A pair qualifies as closely tied when
// max(c_ij, c_ji) >= the threshold.
struct TiePair {
    std::string user_i;
    std::string user_j;
    std::uint64_t c_ij = 0; // comments from user_i to user_j
    std::uint64_t c_ji = 0;
    double tie_score = 0.0;
};

// (c_ij + c_ji) / (coeff * |c_ij - c_ji|), with the difference clamped
// to 1 so equal counts stay defined.
double tie_score(std::uint64_t c_ij, std::uint64_t c_ji, double diff_coefficient = 0.4);

enum class ClusterKind { WC, SC };

// Non-overlapping clusters plus the leftover singletons. Each cluster's
// members sort ascending; clusters sort by size descending, then by
// first member.
struct ClusterSet {
    ClusterKind kind = ClusterKind::WC;
    std::vector<std::vector<std::string>> clusters;
    std::vector<std::string> unclustered;
};

// Strongly connected components of the full interaction graph, keeping
// those of at least min_cluster_size.
ClusterSet weak_clusters(const UserInteractionGraph& graph, const ClusterConfig& config = {});

// All closely tied pairs, descending by tie score (ties by pair name).
std::vector<TiePair> ctup_pairs(const UserInteractionGraph& graph,
                                const ClusterConfig& config = {});

// Strongly connected components of the graph restricted to edges whose
// endpoint pair is closely tied (both directions of a qualifying pair
// are kept, each with its own weight). Every strong cluster is a subset
// of exactly one weak cluster.
ClusterSet strong_clusters(const UserInteractionGraph& graph, const ClusterConfig& config = {});

struct ClusterCensus {
    // cluster size -> (weak count, strong count)
    std::map<std::size_t, std::pair<std::uint64_t, std::uint64_t>> size_histogram;
    std::uint64_t wc_count = 0;
    std::uint64_t sc_count = 0;
    std::size_t largest_wc = 0;
    std::size_t largest_sc = 0;
    std::uint64_t unclustered_count = 0;
    std::uint64_t graph_nodes = 0;
    std::uint64_t active_users = 0;
    double largest_wc_active_share = 0.0;
    double unclustered_active_share = 0.0;
};

// Size histogram over both cluster sets plus the active-user shares.
// active_users is the denominator for the share figures.
ClusterCensus cluster_census(const ClusterSet& weak, const ClusterSet& strong,
                             std::uint64_t active_users);

// CSV: user_i,user_j,c_ij,c_ji,tie_score with 4-decimal scores.
void write_tiepairs_csv(std::ostream& out, const std::vector<TiePair>& pairs);

} // namespace uigkit

#endif
