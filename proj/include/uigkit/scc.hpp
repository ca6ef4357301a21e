#ifndef UIGKIT_SCC_HPP
#define UIGKIT_SCC_HPP

#include <cstdint>
#include <vector>

namespace uigkit::scc {

using NodeId = std::uint32_t;
using Adjacency = std::vector<std::vector<NodeId>>;

// Tarjan's algorithm with an explicit stack, so component size is not
// bounded by recursion depth. Returns one component id per node;
// component_count receives the number of components. Ids are dense and
// assigned in reverse topological completion order.
std::vector<NodeId> component_ids(const Adjacency& graph, std::size_t& component_count);

// Components as node lists. Each component's nodes sort ascending;
// components sort by their smallest node.
std::vector<std::vector<NodeId>> components(const Adjacency& graph);

} // namespace uigkit::scc

#endif
