#ifndef UIGKIT_GRAPH_HPP
#define UIGKIT_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "uigkit/ingest.hpp"

namespace uigkit {

struct DegreeSummary {
    std::string user;
    std::uint64_t in_weight = 0;
    std::uint64_t out_weight = 0;
    std::uint64_t total_weight() const { return in_weight + out_weight; }
};

// Directed weighted graph over users. An edge u -> v with weight w means
// u commented w times on v's posts or comments. Node ids are assigned in
// first-appearance order; a self-loop contributes 1 to in_weight and 1
// to out_weight of its node.
class UserInteractionGraph {
public:
    using NodeId = std::uint32_t;

    NodeId intern(std::string_view user);
    std::optional<NodeId> find(std::string_view user) const;
    const std::string& name(NodeId id) const { return names_[id]; }

    // Increments the edge weight by 1, creating nodes/edge as needed.
    void add_interaction(std::string_view from, std::string_view to);
    void add_edge(NodeId from, NodeId to, std::uint32_t weight);

    std::size_t node_count() const { return names_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::uint64_t total_weight() const { return total_weight_; }
    bool empty() const { return names_.empty(); }

    // Out-edges of a node, keyed by target id (deterministic order).
    const std::map<NodeId, std::uint32_t>& out_edges(NodeId id) const { return out_[id]; }
    std::uint32_t weight(NodeId from, NodeId to) const;
    // 0 when either user is absent.
    std::uint32_t weight(std::string_view from, std::string_view to) const;
    std::uint64_t in_weight(NodeId id) const { return in_weight_[id]; }
    std::uint64_t out_weight(NodeId id) const { return out_weight_[id]; }

    const std::vector<std::string>& node_names() const { return names_; }

    // Node ids sorted by username.
    std::vector<NodeId> nodes_by_name() const;

    const std::string& slice_label() const { return slice_label_; }
    void set_slice_label(std::string label) { slice_label_ = std::move(label); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, NodeId> ids_;
    std::vector<std::map<NodeId, std::uint32_t>> out_;
    std::vector<std::uint64_t> in_weight_;
    std::vector<std::uint64_t> out_weight_;
    std::size_t edge_count_ = 0;
    std::uint64_t total_weight_ = 0;
    std::string slice_label_ = "ALL";
};

// Builds the interaction graph from resolved pairs. With a month filter,
// only pairs carrying that month_key are kept.
UserInteractionGraph build_uig(const std::vector<InteractionPair>& pairs,
                               const std::optional<std::string>& month = std::nullopt);

// One graph per month_key present in the input; keys sort ascending.
std::map<std::string, UserInteractionGraph>
slice_by_month(const std::vector<InteractionPair>& pairs);

// The user with the highest weighted total degree; ties break to the
// lexicographically smallest username. Throws DataError on an empty graph.
DegreeSummary influencer(const UserInteractionGraph& graph);

DegreeSummary degree_summary(const UserInteractionGraph& graph,
                             UserInteractionGraph::NodeId id);

} // namespace uigkit

#endif
