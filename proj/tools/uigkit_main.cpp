// uigkit — build and analyze user interaction graphs from post/comment
// CSV dumps. Every subcommand reads one or more dumps, writes artifacts
// with stable filenames into --out, and prints a one-line summary.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>

#include "uigkit/analytics.hpp"
#include "uigkit/cluster.hpp"
#include "uigkit/community.hpp"
#include "uigkit/csv.hpp"
#include "uigkit/errors.hpp"
#include "uigkit/graph.hpp"
#include "uigkit/graph_io.hpp"
#include "uigkit/ingest.hpp"
#include "uigkit/json_writer.hpp"
#include "uigkit/keywords.hpp"
#include "uigkit/report.hpp"
#include "uigkit/version.hpp"

namespace fs = std::filesystem;
using namespace uigkit;

namespace {

struct Opts {
    std::vector<std::string> inputs;
    std::string out = ".";
    std::vector<std::string> months;
    std::size_t top_k = 10;
    ClusterConfig cluster;
    std::vector<std::string> columns; // field=Header overrides
    std::string metric = "all";
    std::string format = "dot";
    std::size_t max_removals = 0; // 0 = unbounded
};

struct TaggedDrop {
    std::string file;
    DroppedRow row;
};

struct Dataset {
    std::vector<InteractionRecord> records; // month-filtered
    std::vector<DroppedRow> dropped;        // merged, for the ingest report
    std::vector<TaggedDrop> dropped_by_file;
};

SchemaConfig schema_from(const Opts& opts) {
    SchemaConfig schema;
    for (const auto& assignment : opts.columns) {
        auto eq = assignment.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == assignment.size())
            throw UsageError("--column expects field=Header, got '" + assignment + "'");
        std::string field = assignment.substr(0, eq);
        std::string header = assignment.substr(eq + 1);
        if (field == "author") schema.author = header;
        else if (field == "author_id") schema.author_id = header;
        else if (field == "created") schema.created = header;
        else if (field == "ups") schema.ups = header;
        else if (field == "downs") schema.downs = header;
        else if (field == "score") schema.score = header;
        else if (field == "item_id") schema.item_id = header;
        else if (field == "parent_id") schema.parent_id = header;
        else if (field == "permalink") schema.permalink = header;
        else if (field == "body") schema.body = header;
        else if (field == "title") schema.title = header;
        else if (field == "parent_author") schema.parent_author = header;
        else if (field == "sentiment") schema.sentiment = header;
        else throw UsageError("--column: unknown field '" + field + "'");
    }
    return schema;
}

Dataset load_dataset(const Opts& opts) {
    SchemaConfig schema = schema_from(opts);
    Dataset data;
    for (const auto& path : opts.inputs) {
        auto parsed = parse_records_file(path, schema);
        std::string base = fs::path(path).filename().string();
        for (const auto& d : parsed.dropped) {
            data.dropped.push_back(d);
            data.dropped_by_file.push_back({base, d});
        }
        data.records.insert(data.records.end(), parsed.records.begin(),
                            parsed.records.end());
    }
    if (!opts.months.empty()) {
        std::unordered_set<std::string> keep(opts.months.begin(), opts.months.end());
        std::erase_if(data.records, [&](const InteractionRecord& r) {
            return !keep.count(r.month_key);
        });
    }
    return data;
}

RunConfig run_config(const Opts& opts) {
    RunConfig cfg;
    cfg.inputs = opts.inputs;
    cfg.out_dir = opts.out;
    cfg.months = opts.months;
    cfg.top_k = opts.top_k;
    cfg.cluster = opts.cluster;
    return cfg;
}

fs::path ensure_out_dir(const Opts& opts) {
    fs::path dir(opts.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw DataError("cannot create output directory " + dir.string() +
                            ": " + ec.message());
    return dir;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + path.string());
    return out;
}

jsonw::Value ingest_json(const Opts& opts, const IngestReport& report,
                         std::uint64_t unresolved) {
    auto root = jsonw::Value::object();
    root.set("tool", kToolName);
    root.set("version", kToolVersion);
    auto inputs = jsonw::Value::array();
    for (const auto& p : opts.inputs) inputs.push(fs::path(p).filename().string());
    root.set("inputs", std::move(inputs));
    root.set("total_records", report.post_count + report.comment_count);
    root.set("post_count", report.post_count);
    root.set("comment_count", report.comment_count);
    root.set("total_users", report.total_users);
    root.set("active_users", report.active_users);
    root.set("active_user_fraction",
             report.total_users ? static_cast<double>(report.active_users) /
                                      static_cast<double>(report.total_users)
                                : 0.0);
    root.set("dropped_rows", report.dropped_rows);
    auto reasons = jsonw::Value::object();
    for (const auto& [reason, count] : report.dropped_reasons) reasons.set(reason, count);
    root.set("dropped_reasons", std::move(reasons));
    root.set("min_created", report.min_created);
    root.set("max_created", report.max_created);
    root.set("unresolved_parents", unresolved);
    return root;
}

jsonw::Value cluster_set_json(const ClusterSet& set) {
    auto root = jsonw::Value::object();
    root.set("kind", set.kind == ClusterKind::WC ? "WC" : "SC");
    root.set("count", static_cast<std::uint64_t>(set.clusters.size()));
    auto clusters = jsonw::Value::array();
    for (const auto& members : set.clusters) {
        auto arr = jsonw::Value::array();
        for (const auto& m : members) arr.push(m);
        clusters.push(std::move(arr));
    }
    root.set("clusters", std::move(clusters));
    auto rest = jsonw::Value::array();
    for (const auto& u : set.unclustered) rest.push(u);
    root.set("unclustered", std::move(rest));
    return root;
}

int cmd_validate(const Opts& opts) {
    auto dir = ensure_out_dir(opts);
    auto data = load_dataset(opts);
    auto report = validate_dataset(data.records, data.dropped);
    auto resolve = resolve_parents(data.records);

    jsonw::write_file((dir / "ingest_report.json").string(),
                      ingest_json(opts, report, resolve.unresolved));
    auto out = open_out(dir / "dropped_rows.csv");
    out << "file,row,reason\n";
    for (const auto& d : data.dropped_by_file)
        csv::write_row(out, {d.file, std::to_string(d.row.row_number), d.row.reason});

    std::cout << "parsed " << report.post_count + report.comment_count << " records ("
              << report.post_count << " posts, " << report.comment_count
              << " comments), " << report.total_users << " users ("
              << report.active_users << " active), " << report.dropped_rows
              << " rows dropped, " << resolve.unresolved << " unresolved parents\n";
    return 0;
}

UserInteractionGraph graph_from(const Dataset& data) {
    auto resolve = resolve_parents(data.records);
    return build_uig(resolve.pairs);
}

int cmd_build(const Opts& opts) {
    auto dir = ensure_out_dir(opts);
    auto data = load_dataset(opts);
    auto graph = graph_from(data);
    GraphFormat format = graph_format_from_string(opts.format);

    save_snapshot_file((dir / "uig.snapshot").string(), graph);
    const char* name = format == GraphFormat::dot            ? "graph.dot"
                       : format == GraphFormat::adjacency_json ? "graph.json"
                                                               : "graph_edges.csv";
    auto out = open_out(dir / name);
    export_graph(out, graph, format);

    std::cout << "graph: " << graph.node_count() << " nodes, " << graph.edge_count()
              << " edges, total weight " << graph.total_weight();
    if (!graph.empty()) {
        auto top = influencer(graph);
        std::cout << "; influencer: " << top.user << " (total degree "
                  << top.total_weight() << ")";
    }
    std::cout << "\n";
    return 0;
}

int cmd_clusters(const Opts& opts) {
    auto dir = ensure_out_dir(opts);
    auto data = load_dataset(opts);
    auto report = validate_dataset(data.records, data.dropped);
    auto graph = graph_from(data);
    auto weak = weak_clusters(graph, opts.cluster);
    auto strong = strong_clusters(graph, opts.cluster);
    auto census = cluster_census(weak, strong, report.active_users);

    jsonw::write_file((dir / "clusters_wc.json").string(), cluster_set_json(weak));
    jsonw::write_file((dir / "clusters_sc.json").string(), cluster_set_json(strong));

    auto cj = jsonw::Value::object();
    cj.set("weak_count", census.wc_count);
    cj.set("strong_count", census.sc_count);
    cj.set("largest_weak", census.largest_wc);
    cj.set("largest_strong", census.largest_sc);
    auto hist = jsonw::Value::array();
    for (const auto& [size, counts] : census.size_histogram) {
        auto row = jsonw::Value::object();
        row.set("size", size);
        row.set("weak", counts.first);
        row.set("strong", counts.second);
        hist.push(std::move(row));
    }
    cj.set("size_histogram", std::move(hist));
    cj.set("unclustered", census.unclustered_count);
    cj.set("graph_nodes", census.graph_nodes);
    cj.set("active_users", census.active_users);
    cj.set("largest_weak_active_share", census.largest_wc_active_share);
    cj.set("unclustered_active_share", census.unclustered_active_share);
    jsonw::write_file((dir / "cluster_census.json").string(), cj);

    std::cout << census.wc_count << " weak clusters, " << census.sc_count
              << " strong clusters; largest " << census.largest_wc << "/"
              << census.largest_sc << "; " << census.unclustered_count
              << " unclustered\n";
    return 0;
}

int cmd_ctup(const Opts& opts) {
    auto dir = ensure_out_dir(opts);
    auto data = load_dataset(opts);
    auto graph = graph_from(data);
    auto pairs = ctup_pairs(graph, opts.cluster);
    auto out = open_out(dir / "tiepairs.csv");
    write_tiepairs_csv(out, pairs);
    std::cout << pairs.size() << " closely tied user pairs (threshold "
              << opts.cluster.ctup_threshold << ")\n";
    return 0;
}

int cmd_communities(const Opts& opts) {
    auto dir = ensure_out_dir(opts);
    auto data = load_dataset(opts);
    auto graph = graph_from(data);
    auto undirected = project_undirected(graph);
    auto partition = detect_communities(undirected, opts.max_removals);

    auto root = jsonw::Value::object();
    root.set("modularity", partition.modularity);
    root.set("count", static_cast<std::uint64_t>(partition.communities.size()));
    auto comms = jsonw::Value::array();
    for (const auto& members : partition.communities) {
        auto arr = jsonw::Value::array();
        for (const auto& m : members) arr.push(m);
        comms.push(std::move(arr));
    }
    root.set("communities", std::move(comms));
    auto removals = jsonw::Value::array();
    for (const auto& [a, b] : partition.removal_trace) {
        auto edge = jsonw::Value::array();
        edge.push(a);
        edge.push(b);
        removals.push(std::move(edge));
    }
    root.set("removals", std::move(removals));
    jsonw::write_file((dir / "communities.json").string(), root);

    auto out = open_out(dir / "community_sizes.csv");
    out << "community,size\n";
    for (std::size_t i = 0; i < partition.communities.size(); ++i)
        csv::write_row(out, {std::to_string(i + 1),
                             std::to_string(partition.communities[i].size())});

    char q[32];
    std::snprintf(q, sizeof(q), "%.4f", partition.modularity);
    std::cout << partition.communities.size() << " communities, modularity " << q
              << ", " << partition.removal_trace.size() << " edges removed\n";
    return 0;
}

// Σ downs is zero in dumps written after the platform stopped exposing
// downvotes; fall back to lowest total score so the ranking stays useful.
std::vector<RankingEntry> downvote_ranking(const std::vector<InteractionRecord>& records,
                                           std::size_t k) {
    bool any_downs = false;
    for (const auto& r : records)
        if (r.downs > 0) { any_downs = true; break; }
    if (any_downs || records.empty())
        return rank_users(records, RankMetric::downvotes, k);
    std::cerr << "warning: downs column is all zero; ranking by lowest total score instead\n";
    return rank_users_lowest_score(records, k);
}

std::vector<RankingEntry> ranking_for(const std::vector<InteractionRecord>& records,
                                      const std::string& metric, std::size_t k) {
    if (metric == "downvotes") return downvote_ranking(records, k);
    return rank_users(records, rank_metric_from_string(metric), k);
}

int cmd_rank(const Opts& opts) {
    auto dir = ensure_out_dir(opts);
    auto data = load_dataset(opts);
    std::vector<std::string> metrics;
    if (opts.metric == "all") metrics = {"upvotes", "activity", "downvotes"};
    else metrics.push_back(opts.metric);
    for (const auto& metric : metrics) {
        auto entries = ranking_for(data.records, metric, opts.top_k);
        auto out = open_out(dir / ("rank_" + metric + ".csv"));
        write_ranking_csv(out, entries);
        std::cout << "rank_" << metric << ".csv: " << entries.size() << " users\n";
    }
    return 0;
}

int cmd_heatmap(const Opts& opts) {
    auto dir = ensure_out_dir(opts);
    auto data = load_dataset(opts);
    std::string metric = opts.metric == "all" ? "upvotes" : opts.metric;
    auto entries = ranking_for(data.records, metric, opts.top_k);
    std::vector<std::string> users;
    users.reserve(entries.size());
    for (const auto& e : entries) users.push_back(e.user);
    auto graph = graph_from(data);
    auto matrix = interaction_heatmap(graph, users);

    const char* name = metric == "upvotes"    ? "heatmap_upvoted.csv"
                       : metric == "activity" ? "heatmap_active.csv"
                                              : "heatmap_downvoted.csv";
    auto out = open_out(dir / name);
    write_heatmap_csv(out, matrix);
    std::cout << name << ": " << users.size() << "x" << users.size() << " matrix";
    if (!matrix.missing_users.empty()) {
        std::cout << "; not in graph:";
        for (const auto& u : matrix.missing_users) std::cout << " " << u;
    }
    std::cout << "\n";
    return 0;
}

int cmd_topics(const Opts& opts) {
    auto dir = ensure_out_dir(opts);
    auto data = load_dataset(opts);
    std::vector<std::string> corpus;
    for (const auto& r : data.records) {
        if (!r.title.empty()) corpus.push_back(r.title);
        if (!r.body.empty()) corpus.push_back(r.body);
    }
    auto keywords = extract_keywords(corpus, opts.top_k);
    auto out = open_out(dir / "keywords.csv");
    write_keywords_csv(out, keywords);
    if (keywords.empty()) std::cout << "no keywords (empty corpus)\n";
    else std::cout << keywords.size() << " keywords; top: " << keywords[0].phrase << "\n";
    return 0;
}

int cmd_slice(const Opts& opts) {
    auto dir = ensure_out_dir(opts);
    auto data = load_dataset(opts);
    auto resolve = resolve_parents(data.records);
    auto slices = slice_by_month(resolve.pairs);

    fs::path slice_dir = dir / "slices";
    std::error_code ec;
    fs::create_directories(slice_dir, ec);
    if (ec) throw DataError("cannot create " + slice_dir.string() + ": " + ec.message());

    auto out = open_out(dir / "influencers_by_month.csv");
    out << "month,user,in_weight,out_weight,total_weight\n";
    for (const auto& [month, slice] : slices) {
        save_snapshot_file((slice_dir / (month + ".snapshot")).string(), slice);
        auto top = influencer(slice);
        csv::write_row(out, {month, top.user, std::to_string(top.in_weight),
                             std::to_string(top.out_weight),
                             std::to_string(top.total_weight())});
    }
    std::cout << slices.size() << " monthly slices written to " << slice_dir.string()
              << "\n";
    return 0;
}

int cmd_report(const Opts& opts) {
    auto dir = ensure_out_dir(opts);
    auto data = load_dataset(opts);
    auto ingest = validate_dataset(data.records, data.dropped);
    auto cfg = run_config(opts);
    auto report = build_summary_report(data.records, ingest, cfg);
    jsonw::write_file((dir / "report.json").string(), report);
    std::cout << "report.json written (config " << config_hash(cfg) << ")\n";
    return 0;
}

void add_common(CLI::App* sub, Opts& opts) {
    sub->add_option("-i,--input", opts.inputs,
                    "Input CSV dump; repeatable, files concatenate in order")
        ->required()
        ->envname("UIGKIT_INPUT");
    sub->add_option("-o,--out", opts.out, "Output directory (created if missing)")
        ->capture_default_str()
        ->envname("UIGKIT_OUT");
    sub->add_option("--months", opts.months,
                    "Restrict analysis to these YYYY-MM months (comma separated)")
        ->delimiter(',')
        ->envname("UIGKIT_MONTHS");
    sub->add_option("-k,--top-k", opts.top_k, "Ranking/keyword list length")
        ->capture_default_str()
        ->check(CLI::PositiveNumber)
        ->envname("UIGKIT_TOP_K");
    sub->add_option("--ctup-threshold", opts.cluster.ctup_threshold,
                    "Minimum one-direction comment count for a closely tied pair")
        ->capture_default_str()
        ->check(CLI::PositiveNumber)
        ->envname("UIGKIT_CTUP_THRESHOLD");
    sub->add_option("--diff-coeff", opts.cluster.diff_coefficient,
                    "Difference coefficient in the tie score")
        ->capture_default_str()
        ->check(CLI::PositiveNumber)
        ->envname("UIGKIT_DIFF_COEFF");
    sub->add_option("--column", opts.columns,
                    "Override a column mapping, field=Header (repeatable)")
        ->envname("UIGKIT_COLUMN");
    // Lets the root --config (and future root flags) appear after the
    // subcommand name as well as before it.
    sub->fallthrough();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"uigkit: user interaction graphs from post/comment dumps"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.set_config("--config", "",
                   "Read options from an INI/TOML file (keys live in a "
                   "[subcommand] section)");
    app.require_subcommand(1);

    Opts opts;
    int status = 0;
    auto wrap = [&status](int (*fn)(const Opts&), const Opts& o) {
        return [fn, &o, &status]() { status = fn(o); };
    };

    auto* validate = app.add_subcommand("validate", "Parse the dump and report ingest statistics");
    add_common(validate, opts);
    validate->callback(wrap(cmd_validate, opts));

    auto* build = app.add_subcommand("build", "Build the interaction graph and export it");
    add_common(build, opts);
    build->add_option("--format", opts.format, "Graph export format: dot, adjacency-json, edge-csv")
        ->capture_default_str()
        ->envname("UIGKIT_FORMAT");
    build->callback(wrap(cmd_build, opts));

    auto* clusters = app.add_subcommand("clusters", "Weak and strong user clusters plus the census");
    add_common(clusters, opts);
    clusters->callback(wrap(cmd_clusters, opts));

    auto* ctup = app.add_subcommand("ctup", "Closely tied user pairs with tie scores");
    add_common(ctup, opts);
    ctup->callback(wrap(cmd_ctup, opts));

    auto* communities = app.add_subcommand("communities", "Edge-betweenness community detection");
    add_common(communities, opts);
    communities->add_option("--max-removals", opts.max_removals,
                            "Stop after this many edge removals (0 = no bound)")
        ->capture_default_str()
        ->envname("UIGKIT_MAX_REMOVALS");
    communities->callback(wrap(cmd_communities, opts));

    auto* rank = app.add_subcommand("rank", "Top-k user rankings");
    add_common(rank, opts);
    rank->add_option("--metric", opts.metric, "upvotes, activity, downvotes, or all")
        ->capture_default_str()
        ->check(CLI::IsMember({"all", "upvotes", "activity", "downvotes"}))
        ->envname("UIGKIT_METRIC");
    rank->callback(wrap(cmd_rank, opts));

    auto* heatmap = app.add_subcommand("heatmap", "Interaction matrix among a ranking's top-k users");
    add_common(heatmap, opts);
    heatmap->add_option("--metric", opts.metric, "Ranking that selects the users")
        ->capture_default_str()
        ->check(CLI::IsMember({"all", "upvotes", "activity", "downvotes"}))
        ->envname("UIGKIT_METRIC");
    heatmap->callback(wrap(cmd_heatmap, opts));

    auto* topics = app.add_subcommand("topics", "Statistical keyword extraction over titles and bodies");
    add_common(topics, opts);
    topics->callback(wrap(cmd_topics, opts));

    auto* slice = app.add_subcommand("slice", "Monthly graph slices and per-month influencers");
    add_common(slice, opts);
    slice->callback(wrap(cmd_slice, opts));

    auto* report = app.add_subcommand("report", "Full pipeline into one summary JSON");
    add_common(report, opts);
    report->callback(wrap(cmd_report, opts));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}
