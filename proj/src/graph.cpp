#include "uigkit/graph.hpp"

#include <algorithm>

#include "uigkit/errors.hpp"

namespace uigkit {

UserInteractionGraph::NodeId UserInteractionGraph::intern(std::string_view user) {
    auto it = ids_.find(std::string(user));
    if (it != ids_.end())
        return it->second;
    NodeId id = static_cast<NodeId>(names_.size());
    names_.emplace_back(user);
    ids_.emplace(names_.back(), id);
    out_.emplace_back();
    in_weight_.push_back(0);
    out_weight_.push_back(0);
    return id;
}

std::optional<UserInteractionGraph::NodeId>
UserInteractionGraph::find(std::string_view user) const {
    auto it = ids_.find(std::string(user));
    if (it == ids_.end())
        return std::nullopt;
    return it->second;
}

void UserInteractionGraph::add_interaction(std::string_view from, std::string_view to) {
    NodeId f = intern(from);
    NodeId t = intern(to);
    add_edge(f, t, 1);
}

void UserInteractionGraph::add_edge(NodeId from, NodeId to, std::uint32_t weight) {
    if (weight == 0)
        return;
    auto [it, inserted] = out_[from].emplace(to, weight);
    if (!inserted)
        it->second += weight;
    else
        ++edge_count_;
    out_weight_[from] += weight;
    in_weight_[to] += weight;
    total_weight_ += weight;
}

std::uint32_t UserInteractionGraph::weight(NodeId from, NodeId to) const {
    const auto& edges = out_[from];
    auto it = edges.find(to);
    return it == edges.end() ? 0 : it->second;
}

std::uint32_t UserInteractionGraph::weight(std::string_view from, std::string_view to) const {
    auto f = find(from);
    auto t = find(to);
    if (!f || !t)
        return 0;
    return weight(*f, *t);
}

std::vector<UserInteractionGraph::NodeId> UserInteractionGraph::nodes_by_name() const {
    std::vector<NodeId> ids(names_.size());
    for (NodeId i = 0; i < ids.size(); ++i)
        ids[i] = i;
    std::sort(ids.begin(), ids.end(),
              [this](NodeId a, NodeId b) { return names_[a] < names_[b]; });
    return ids;
}

UserInteractionGraph build_uig(const std::vector<InteractionPair>& pairs,
                               const std::optional<std::string>& month) {
    UserInteractionGraph graph;
    if (month)
        graph.set_slice_label(*month);
    for (const auto& pair : pairs) {
        if (month && pair.month_key != *month)
            continue;
        graph.add_interaction(pair.commenter, pair.parent_author);
    }
    return graph;
}

std::map<std::string, UserInteractionGraph>
slice_by_month(const std::vector<InteractionPair>& pairs) {
    std::map<std::string, UserInteractionGraph> slices;
    for (const auto& pair : pairs) {
        auto [it, inserted] = slices.try_emplace(pair.month_key);
        if (inserted)
            it->second.set_slice_label(pair.month_key);
        it->second.add_interaction(pair.commenter, pair.parent_author);
    }
    return slices;
}

DegreeSummary degree_summary(const UserInteractionGraph& graph,
                             UserInteractionGraph::NodeId id) {
    return {graph.name(id), graph.in_weight(id), graph.out_weight(id)};
}

DegreeSummary influencer(const UserInteractionGraph& graph) {
    if (graph.empty())
        throw DataError("influencer: empty graph");
    using NodeId = UserInteractionGraph::NodeId;
    NodeId best = 0;
    bool have = false;
    for (NodeId id = 0; id < graph.node_count(); ++id) {
        if (!have) {
            best = id;
            have = true;
            continue;
        }
        std::uint64_t t = graph.in_weight(id) + graph.out_weight(id);
        std::uint64_t bt = graph.in_weight(best) + graph.out_weight(best);
        if (t > bt || (t == bt && graph.name(id) < graph.name(best)))
            best = id;
    }
    return degree_summary(graph, best);
}

} // namespace uigkit
