#include "uigkit/scc.hpp"

#include <algorithm>
#include <limits>

namespace uigkit::scc {

namespace {
constexpr NodeId kUnvisited = std::numeric_limits<NodeId>::max();
}

std::vector<NodeId> component_ids(const Adjacency& graph, std::size_t& component_count) {
    const std::size_t n = graph.size();
    std::vector<NodeId> index(n, kUnvisited);
    std::vector<NodeId> lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<NodeId> component(n, kUnvisited);
    std::vector<NodeId> stack;
    stack.reserve(n);

    struct Frame {
        NodeId vertex;
        std::size_t next_child;
    };
    std::vector<Frame> call_stack;

    NodeId next_index = 0;
    NodeId next_component = 0;

    for (NodeId root = 0; root < n; ++root) {
        if (index[root] != kUnvisited)
            continue;
        call_stack.push_back({root, 0});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call_stack.empty()) {
            Frame& frame = call_stack.back();
            NodeId v = frame.vertex;
            const auto& succs = graph[v];

            if (frame.next_child < succs.size()) {
                NodeId w = succs[frame.next_child++];
                if (index[w] == kUnvisited) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call_stack.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
                continue;
            }

            // v is fully explored
            if (lowlink[v] == index[v]) {
                NodeId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component[w] = next_component;
                } while (w != v);
                ++next_component;
            }
            call_stack.pop_back();
            if (!call_stack.empty()) {
                NodeId parent = call_stack.back().vertex;
                lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
            }
        }
    }

    component_count = next_component;
    return component;
}

std::vector<std::vector<NodeId>> components(const Adjacency& graph) {
    std::size_t count = 0;
    auto ids = component_ids(graph, count);
    std::vector<std::vector<NodeId>> result(count);
    for (NodeId v = 0; v < ids.size(); ++v)
        result[ids[v]].push_back(v);
    // node order within a component is already ascending (v increasing)
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return result;
}

} // namespace uigkit::scc
