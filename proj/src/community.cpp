#include "uigkit/community.hpp"

#include <algorithm>
#include <queue>
#include <thread>

namespace uigkit {

UndirectedGraph::NodeId UndirectedGraph::add_node(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<NodeId>(names_.size() - 1);
}

void UndirectedGraph::add_edge_weight(NodeId a, NodeId b, std::uint64_t weight) {
    if (a == b || weight == 0)
        return;
    if (a > b)
        std::swap(a, b);
    weights_[{a, b}] += weight;
    finalized_ = false;
}

void UndirectedGraph::finalize() {
    edges_.clear();
    edges_.reserve(weights_.size());
    total_weight_ = 0;
    adjacency_.assign(names_.size(), {});
    for (const auto& [key, w] : weights_) {
        EdgeId id = static_cast<EdgeId>(edges_.size());
        edges_.push_back({key.first, key.second, w});
        adjacency_[key.first].emplace_back(key.second, id);
        adjacency_[key.second].emplace_back(key.first, id);
        total_weight_ += w;
    }
    finalized_ = true;
}

const std::vector<std::pair<UndirectedGraph::NodeId, UndirectedGraph::EdgeId>>&
UndirectedGraph::neighbors(NodeId id) const {
    return adjacency_[id];
}

UndirectedGraph project_undirected(const UserInteractionGraph& graph) {
    UndirectedGraph undirected;
    for (const auto& name : graph.node_names())
        undirected.add_node(name);
    for (UserInteractionGraph::NodeId u = 0; u < graph.node_count(); ++u)
        for (const auto& [v, w] : graph.out_edges(u))
            undirected.add_edge_weight(u, v, w);
    undirected.finalize();
    return undirected;
}

namespace {

using NodeId = UndirectedGraph::NodeId;
using EdgeId = UndirectedGraph::EdgeId;

// One-source pass: BFS builds the shortest-path DAG, then a reverse
// sweep counts, for every DAG edge (u,v), sigma(u) * f(v) shortest paths
// through it, where f(v) is the number of shortest-path continuations
// from v (1 for stopping at v plus the continuations of its DAG
// successors). Values are integral, so double accumulation stays exact
// up to 2^53.
void accumulate_source(const UndirectedGraph& graph, const std::vector<bool>& alive,
                       NodeId source, std::vector<double>& edge_score,
                       std::vector<std::int32_t>& dist, std::vector<double>& sigma,
                       std::vector<double>& f, std::vector<NodeId>& order) {
    const std::size_t n = graph.node_count();
    dist.assign(n, -1);
    sigma.assign(n, 0.0);
    f.assign(n, 0.0);
    order.clear();

    dist[source] = 0;
    sigma[source] = 1.0;
    std::size_t head = 0;
    order.push_back(source);
    while (head < order.size()) {
        NodeId u = order[head++];
        for (const auto& [v, eid] : graph.neighbors(u)) {
            if (!alive[eid])
                continue;
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                order.push_back(v);
            }
            if (dist[v] == dist[u] + 1)
                sigma[v] += sigma[u];
        }
    }

    for (std::size_t i = order.size(); i-- > 0;) {
        NodeId v = order[i];
        f[v] = 1.0;
        for (const auto& [w, eid] : graph.neighbors(v)) {
            if (!alive[eid] || dist[w] != dist[v] + 1)
                continue;
            f[v] += f[w];
        }
        // credit DAG edges (u, v) entering v now that f[v] is final
        for (const auto& [u, eid] : graph.neighbors(v)) {
            if (!alive[eid] || dist[u] != dist[v] - 1)
                continue;
            edge_score[eid] += sigma[u] * f[v];
        }
    }
}

std::vector<std::vector<NodeId>> connected_components(const UndirectedGraph& graph,
                                                      const std::vector<bool>& alive) {
    const std::size_t n = graph.node_count();
    std::vector<std::int32_t> comp(n, -1);
    std::vector<std::vector<NodeId>> components;
    std::vector<NodeId> queue;
    for (NodeId start = 0; start < n; ++start) {
        if (comp[start] >= 0)
            continue;
        std::int32_t id = static_cast<std::int32_t>(components.size());
        components.emplace_back();
        comp[start] = id;
        queue.clear();
        queue.push_back(start);
        std::size_t head = 0;
        while (head < queue.size()) {
            NodeId u = queue[head++];
            components[static_cast<std::size_t>(id)].push_back(u);
            for (const auto& [v, eid] : graph.neighbors(u)) {
                if (!alive[eid] || comp[v] >= 0)
                    continue;
                comp[v] = id;
                queue.push_back(v);
            }
        }
    }
    return components;
}

std::vector<std::vector<std::string>>
named_partition(const UndirectedGraph& graph, const std::vector<std::vector<NodeId>>& partition) {
    std::vector<std::vector<std::string>> named;
    named.reserve(partition.size());
    for (const auto& group : partition) {
        std::vector<std::string> names;
        names.reserve(group.size());
        for (NodeId id : group)
            names.push_back(graph.name(id));
        std::sort(names.begin(), names.end());
        named.push_back(std::move(names));
    }
    std::sort(named.begin(), named.end(),
              [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
                  if (a.size() != b.size())
                      return a.size() > b.size();
                  return a.front() < b.front();
              });
    return named;
}

} // namespace

std::vector<double> edge_betweenness_values(const UndirectedGraph& graph,
                                            const std::vector<bool>& edge_alive) {
    const std::size_t n = graph.node_count();
    const std::size_t edge_total = graph.edges().size();
    std::vector<double> scores(edge_total, 0.0);

    unsigned hw = std::thread::hardware_concurrency();
    std::size_t thread_count = (n >= 512 && hw > 1) ? std::min<std::size_t>(hw, 16) : 1;

    if (thread_count <= 1) {
        std::vector<std::int32_t> dist;
        std::vector<double> sigma, f;
        std::vector<NodeId> order;
        for (NodeId s = 0; s < n; ++s)
            accumulate_source(graph, edge_alive, s, scores, dist, sigma, f, order);
    } else {
        std::vector<std::vector<double>> partials(thread_count,
                                                  std::vector<double>(edge_total, 0.0));
        std::vector<std::thread> workers;
        workers.reserve(thread_count);
        for (std::size_t t = 0; t < thread_count; ++t) {
            workers.emplace_back([&, t] {
                std::vector<std::int32_t> dist;
                std::vector<double> sigma, f;
                std::vector<NodeId> order;
                for (NodeId s = static_cast<NodeId>(t); s < n;
                     s += static_cast<NodeId>(thread_count))
                    accumulate_source(graph, edge_alive, s, partials[t], dist, sigma, f, order);
            });
        }
        for (auto& w : workers)
            w.join();
        // fixed merge order keeps the result independent of scheduling
        for (std::size_t t = 0; t < thread_count; ++t)
            for (std::size_t e = 0; e < edge_total; ++e)
                scores[e] += partials[t][e];
    }

    for (auto& s : scores)
        s /= 2.0;
    return scores;
}

std::map<std::pair<std::string, std::string>, double>
edge_betweenness(const UndirectedGraph& graph) {
    std::vector<bool> alive(graph.edges().size(), true);
    auto values = edge_betweenness_values(graph, alive);
    std::map<std::pair<std::string, std::string>, double> result;
    for (EdgeId e = 0; e < values.size(); ++e) {
        const auto& edge = graph.edges()[e];
        std::string a = graph.name(edge.u);
        std::string b = graph.name(edge.v);
        if (b < a)
            std::swap(a, b);
        result[{a, b}] = values[e];
    }
    return result;
}

double modularity(const UndirectedGraph& graph,
                  const std::vector<std::vector<NodeId>>& partition) {
    const std::uint64_t W = graph.total_weight();
    if (W == 0)
        return 0.0;
    std::vector<std::int32_t> community(graph.node_count(), -1);
    for (std::size_t c = 0; c < partition.size(); ++c)
        for (NodeId v : partition[c])
            community[v] = static_cast<std::int32_t>(c);

    std::vector<double> internal(partition.size(), 0.0);
    std::vector<double> degree(partition.size(), 0.0);
    for (const auto& edge : graph.edges()) {
        std::int32_t cu = community[edge.u];
        std::int32_t cv = community[edge.v];
        double w = static_cast<double>(edge.weight);
        if (cu >= 0)
            degree[static_cast<std::size_t>(cu)] += w;
        if (cv >= 0)
            degree[static_cast<std::size_t>(cv)] += w;
        if (cu >= 0 && cu == cv)
            internal[static_cast<std::size_t>(cu)] += w;
    }

    const double total = static_cast<double>(W);
    double q = 0.0;
    for (std::size_t c = 0; c < partition.size(); ++c) {
        double frac = degree[c] / (2.0 * total);
        q += internal[c] / total - frac * frac;
    }
    return q;
}

CommunityPartition detect_communities(const UndirectedGraph& graph, std::size_t max_removals) {
    CommunityPartition result;
    if (graph.node_count() == 0) {
        result.modularity = 0.0;
        return result;
    }

    std::vector<bool> alive(graph.edges().size(), true);
    std::size_t alive_count = graph.edges().size();
    const std::size_t bound = max_removals == 0 ? alive_count : max_removals;

    auto partition = connected_components(graph, alive);
    double best_q = modularity(graph, partition);
    auto best_partition = partition;

    for (std::size_t step = 0; step < bound && alive_count > 0; ++step) {
        auto scores = edge_betweenness_values(graph, alive);
        EdgeId best_edge = 0;
        bool found = false;
        for (EdgeId e = 0; e < scores.size(); ++e) {
            if (!alive[e])
                continue;
            if (!found) {
                best_edge = e;
                found = true;
                continue;
            }
            if (scores[e] > scores[best_edge]) {
                best_edge = e;
            } else if (scores[e] == scores[best_edge]) {
                const auto& a = graph.edges()[e];
                const auto& b = graph.edges()[best_edge];
                auto key = [&graph](const UndirectedGraph::Edge& edge) {
                    std::pair<std::string, std::string> k{graph.name(edge.u),
                                                          graph.name(edge.v)};
                    if (k.second < k.first)
                        std::swap(k.first, k.second);
                    return k;
                };
                if (key(a) < key(b))
                    best_edge = e;
            }
        }
        if (!found)
            break;

        alive[best_edge] = false;
        --alive_count;
        const auto& removed = graph.edges()[best_edge];
        std::string a = graph.name(removed.u);
        std::string b = graph.name(removed.v);
        if (b < a)
            std::swap(a, b);
        result.removal_trace.emplace_back(a, b);

        partition = connected_components(graph, alive);
        double q = modularity(graph, partition);
        if (q > best_q) {
            best_q = q;
            best_partition = partition;
        }
    }

    result.communities = named_partition(graph, best_partition);
    result.modularity = best_q;
    return result;
}

} // namespace uigkit
