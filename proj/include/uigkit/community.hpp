#ifndef UIGKIT_COMMUNITY_HPP
#define UIGKIT_COMMUNITY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uigkit/graph.hpp"

namespace uigkit {

// Undirected weighted projection of the interaction graph: directional
// weights are summed per pair, self-loops are dropped. Nodes keep the
// source graph's names; isolated nodes are preserved.
class UndirectedGraph {
public:
    using NodeId = std::uint32_t;
    using EdgeId = std::uint32_t;

    struct Edge {
        NodeId u, v; // u < v
        std::uint64_t weight;
    };

    NodeId add_node(std::string name);
    // Adds weight to the undirected edge {a, b}; a == b is ignored.
    void add_edge_weight(NodeId a, NodeId b, std::uint64_t weight);

    std::size_t node_count() const { return names_.size(); }
    const std::string& name(NodeId id) const { return names_[id]; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::uint64_t total_weight() const { return total_weight_; }

    // neighbor node + edge id pairs, ordered by neighbor id
    const std::vector<std::pair<NodeId, EdgeId>>& neighbors(NodeId id) const;

    // Called once after all add_edge_weight calls; builds adjacency.
    void finalize();

private:
    std::vector<std::string> names_;
    std::map<std::pair<NodeId, NodeId>, std::uint64_t> weights_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<NodeId, EdgeId>>> adjacency_;
    std::uint64_t total_weight_ = 0;
    bool finalized_ = false;
};

UndirectedGraph project_undirected(const UserInteractionGraph& graph);

// Shortest-path (hop count) edge betweenness: the number of shortest
// paths over all ordered node pairs that traverse each edge, divided by
// two. Computed by per-source BFS accumulation; runs multi-threaded on
// large graphs with a deterministic merge.
std::vector<double> edge_betweenness_values(const UndirectedGraph& graph,
                                            const std::vector<bool>& edge_alive);
std::map<std::pair<std::string, std::string>, double>
edge_betweenness(const UndirectedGraph& graph);

// Newman modularity of a node partition against the full projection.
// Zero-weight graphs score 0.
double modularity(const UndirectedGraph& graph,
                  const std::vector<std::vector<UndirectedGraph::NodeId>>& partition);

struct CommunityPartition {
    std::vector<std::vector<std::string>> communities;
    double modularity = 0.0;
    std::vector<std::pair<std::string, std::string>> removal_trace;
};

// Iteratively removes the maximum-betweenness edge (ties to the
// lexicographically smallest edge), tracking connected components, and
// returns the partition with the highest modularity encountered
// (earliest wins ties). max_removals bounds the loop; 0 removes edges
// until none remain.
CommunityPartition detect_communities(const UndirectedGraph& graph,
                                      std::size_t max_removals = 0);

} // namespace uigkit

#endif
