#ifndef UIGKIT_GRAPH_IO_HPP
#define UIGKIT_GRAPH_IO_HPP

#include <istream>
#include <ostream>
#include <string>

#include "uigkit/graph.hpp"

namespace uigkit {

enum class GraphFormat { dot, adjacency_json, edge_csv };

// Parses "dot", "adjacency-json" or "edge-csv"; anything else is a
// UsageError.
GraphFormat graph_format_from_string(const std::string& s);

// Byte-stable export: nodes and edges ordered by username.
void export_graph(std::ostream& out, const UserInteractionGraph& graph, GraphFormat format);
std::string export_graph_string(const UserInteractionGraph& graph, GraphFormat format);

// Reads the edge-csv format (header source,target,weight).
UserInteractionGraph import_edge_csv(std::istream& in);

// Versioned binary snapshot: magic "UIG1", little-endian u32 length,
// JSON metadata (slice label + node table), then (source, target,
// weight) little-endian u32 triples.
void save_snapshot(std::ostream& out, const UserInteractionGraph& graph);
void save_snapshot_file(const std::string& path, const UserInteractionGraph& graph);
UserInteractionGraph load_snapshot(std::istream& in);
UserInteractionGraph load_snapshot_file(const std::string& path);

} // namespace uigkit

#endif
