#include "uigkit/graph_io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "uigkit/csv.hpp"
#include "uigkit/errors.hpp"
#include "uigkit/json_writer.hpp"

namespace uigkit {

namespace {

constexpr char kMagic[4] = {'U', 'I', 'G', '1'};

std::string dot_quote(const std::string& name) {
    std::string out = "\"";
    for (char c : name) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_u32(std::ostream& out, std::uint32_t v) {
    unsigned char buf[4] = {static_cast<unsigned char>(v & 0xff),
                            static_cast<unsigned char>((v >> 8) & 0xff),
                            static_cast<unsigned char>((v >> 16) & 0xff),
                            static_cast<unsigned char>((v >> 24) & 0xff)};
    out.write(reinterpret_cast<const char*>(buf), 4);
}

std::uint32_t read_u32(std::istream& in) {
    unsigned char buf[4];
    in.read(reinterpret_cast<char*>(buf), 4);
    if (!in)
        throw DataError("snapshot: truncated file");
    return static_cast<std::uint32_t>(buf[0]) | (static_cast<std::uint32_t>(buf[1]) << 8) |
           (static_cast<std::uint32_t>(buf[2]) << 16) |
           (static_cast<std::uint32_t>(buf[3]) << 24);
}

} // namespace

GraphFormat graph_format_from_string(const std::string& s) {
    if (s == "dot")
        return GraphFormat::dot;
    if (s == "adjacency-json" || s == "json")
        return GraphFormat::adjacency_json;
    if (s == "edge-csv" || s == "csv")
        return GraphFormat::edge_csv;
    throw UsageError("unknown graph format: " + s +
                     " (expected dot, adjacency-json or edge-csv)");
}

void export_graph(std::ostream& out, const UserInteractionGraph& graph, GraphFormat format) {
    using NodeId = UserInteractionGraph::NodeId;
    const auto order = graph.nodes_by_name();

    switch (format) {
    case GraphFormat::dot: {
        out << "digraph uig {\n";
        for (NodeId id : order)
            out << "  " << dot_quote(graph.name(id)) << ";\n";
        for (NodeId src : order) {
            // out_edges are keyed by id; re-sort targets by name
            std::vector<NodeId> targets;
            targets.reserve(graph.out_edges(src).size());
            for (const auto& [tgt, w] : graph.out_edges(src))
                targets.push_back(tgt);
            std::sort(targets.begin(), targets.end(), [&](NodeId a, NodeId b) {
                return graph.name(a) < graph.name(b);
            });
            for (NodeId tgt : targets)
                out << "  " << dot_quote(graph.name(src)) << " -> "
                    << dot_quote(graph.name(tgt)) << " [label=" << graph.weight(src, tgt)
                    << ", weight=" << graph.weight(src, tgt) << "];\n";
        }
        out << "}\n";
        break;
    }
    case GraphFormat::adjacency_json: {
        auto root = jsonw::Value::object();
        for (NodeId src : order) {
            auto list = jsonw::Value::array();
            std::vector<NodeId> targets;
            for (const auto& [tgt, w] : graph.out_edges(src))
                targets.push_back(tgt);
            std::sort(targets.begin(), targets.end(), [&](NodeId a, NodeId b) {
                return graph.name(a) < graph.name(b);
            });
            for (NodeId tgt : targets) {
                auto entry = jsonw::Value::object();
                entry.set("target", graph.name(tgt));
                entry.set("weight", static_cast<std::uint64_t>(graph.weight(src, tgt)));
                list.push(std::move(entry));
            }
            root.set(graph.name(src), std::move(list));
        }
        out << root.dump() << '\n';
        break;
    }
    case GraphFormat::edge_csv: {
        csv::write_row(out, {"source", "target", "weight"});
        for (NodeId src : order) {
            std::vector<NodeId> targets;
            for (const auto& [tgt, w] : graph.out_edges(src))
                targets.push_back(tgt);
            std::sort(targets.begin(), targets.end(), [&](NodeId a, NodeId b) {
                return graph.name(a) < graph.name(b);
            });
            for (NodeId tgt : targets)
                csv::write_row(out, {graph.name(src), graph.name(tgt),
                                     std::to_string(graph.weight(src, tgt))});
        }
        break;
    }
    }
}

std::string export_graph_string(const UserInteractionGraph& graph, GraphFormat format) {
    std::ostringstream out;
    export_graph(out, graph, format);
    return out.str();
}

UserInteractionGraph import_edge_csv(std::istream& in) {
    csv::Reader reader(in);
    std::vector<std::string> row;
    if (!reader.next(row) || row.size() != 3 || row[0] != "source" || row[1] != "target" ||
        row[2] != "weight")
        throw DataError("edge-csv: bad header (expected source,target,weight)");
    UserInteractionGraph graph;
    while (reader.next(row)) {
        if (row.size() != 3)
            throw DataError("edge-csv: malformed row");
        char* end = nullptr;
        long w = std::strtol(row[2].c_str(), &end, 10);
        if (end == row[2].c_str() || *end != '\0' || w <= 0)
            throw DataError("edge-csv: bad weight: " + row[2]);
        auto src = graph.intern(row[0]);
        auto tgt = graph.intern(row[1]);
        graph.add_edge(src, tgt, static_cast<std::uint32_t>(w));
    }
    return graph;
}

void save_snapshot(std::ostream& out, const UserInteractionGraph& graph) {
    auto meta = jsonw::Value::object();
    meta.set("slice", graph.slice_label());
    auto nodes = jsonw::Value::array();
    for (const auto& name : graph.node_names())
        nodes.push(name);
    meta.set("nodes", std::move(nodes));
    meta.set("edge_count", graph.edge_count());
    const std::string meta_text = meta.dump();
    if (meta_text.size() > 0xffffffffu)
        throw DataError("snapshot: metadata too large");

    out.write(kMagic, 4);
    write_u32(out, static_cast<std::uint32_t>(meta_text.size()));
    out.write(meta_text.data(), static_cast<std::streamsize>(meta_text.size()));
    for (UserInteractionGraph::NodeId src = 0; src < graph.node_count(); ++src) {
        for (const auto& [tgt, w] : graph.out_edges(src)) {
            write_u32(out, src);
            write_u32(out, tgt);
            write_u32(out, w);
        }
    }
}

void save_snapshot_file(const std::string& path, const UserInteractionGraph& graph) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write snapshot: " + path);
    save_snapshot(out, graph);
}

UserInteractionGraph load_snapshot(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw DataError("snapshot: bad magic (not a UIG1 file)");
    std::uint32_t meta_len = read_u32(in);
    std::string meta_text(meta_len, '\0');
    in.read(meta_text.data(), meta_len);
    if (!in)
        throw DataError("snapshot: truncated metadata");

    nlohmann::json meta;
    try {
        meta = nlohmann::json::parse(meta_text);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("snapshot: bad metadata: ") + e.what());
    }
    if (!meta.contains("nodes") || !meta["nodes"].is_array())
        throw DataError("snapshot: metadata missing node table");

    UserInteractionGraph graph;
    graph.set_slice_label(meta.value("slice", std::string("ALL")));
    std::vector<UserInteractionGraph::NodeId> ids;
    for (const auto& name : meta["nodes"]) {
        if (!name.is_string())
            throw DataError("snapshot: node table entry is not a string");
        ids.push_back(graph.intern(name.get<std::string>()));
    }

    while (true) {
        unsigned char buf[12];
        in.read(reinterpret_cast<char*>(buf), 12);
        if (in.gcount() == 0 && in.eof())
            break;
        if (in.gcount() != 12)
            throw DataError("snapshot: truncated edge record");
        auto decode = [&buf](int off) {
            return static_cast<std::uint32_t>(buf[off]) |
                   (static_cast<std::uint32_t>(buf[off + 1]) << 8) |
                   (static_cast<std::uint32_t>(buf[off + 2]) << 16) |
                   (static_cast<std::uint32_t>(buf[off + 3]) << 24);
        };
        std::uint32_t src = decode(0), tgt = decode(4), w = decode(8);
        if (src >= ids.size() || tgt >= ids.size())
            throw DataError("snapshot: edge endpoint out of range");
        graph.add_edge(ids[src], ids[tgt], w);
    }
    return graph;
}

UserInteractionGraph load_snapshot_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot open snapshot: " + path);
    return load_snapshot(in);
}

} // namespace uigkit
