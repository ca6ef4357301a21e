#include "uigkit/report.hpp"

#include <algorithm>
#include <cstdio>

#include "uigkit/analytics.hpp"
#include "uigkit/errors.hpp"
#include "uigkit/graph.hpp"
#include "uigkit/keywords.hpp"
#include "uigkit/version.hpp"

namespace uigkit {

namespace {

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string basename_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += parts[i];
    }
    return out;
}

jsonw::Value ranking_json(const std::vector<RankingEntry>& entries) {
    auto arr = jsonw::Value::array();
    for (const auto& e : entries) {
        auto row = jsonw::Value::object();
        row.set("rank", e.rank);
        row.set("user", e.user);
        row.set("value", e.value);
        arr.push(std::move(row));
    }
    return arr;
}

std::vector<std::string> ranking_users(const std::vector<RankingEntry>& entries) {
    std::vector<std::string> users;
    users.reserve(entries.size());
    for (const auto& e : entries) users.push_back(e.user);
    return users;
}

} // namespace

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char byte : data) {
        hash ^= byte;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string canonical_config_string(const RunConfig& cfg) {
    std::vector<std::string> inputs;
    inputs.reserve(cfg.inputs.size());
    for (const auto& p : cfg.inputs) inputs.push_back(basename_of(p));
    std::vector<std::string> months = cfg.months;
    std::sort(months.begin(), months.end());
    months.erase(std::unique(months.begin(), months.end()), months.end());
    std::vector<std::string> ps;
    ps.reserve(cfg.concentration_ps.size());
    for (double p : cfg.concentration_ps) ps.push_back(fixed4(p));

    std::string out;
    out += "concentration_ps=" + join(ps);
    out += "\nctup_threshold=" + std::to_string(cfg.cluster.ctup_threshold);
    out += "\ndiff_coefficient=" + fixed4(cfg.cluster.diff_coefficient);
    out += "\ninputs=" + join(inputs);
    out += "\nmin_cluster_size=" + std::to_string(cfg.cluster.min_cluster_size);
    out += "\nmonths=" + (months.empty() ? std::string("ALL") : join(months));
    out += "\ntop_k=" + std::to_string(cfg.top_k);
    return out;
}

std::string config_hash(const RunConfig& cfg) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_config_string(cfg))));
    return buf;
}

jsonw::Value build_summary_report(const std::vector<InteractionRecord>& records,
                                  const IngestReport& ingest,
                                  const RunConfig& cfg) {
    if (records.empty())
        throw DataError("summary report needs at least one record");

    auto resolve = resolve_parents(records);
    auto graph = build_uig(resolve.pairs);
    auto slices = slice_by_month(resolve.pairs);
    auto weak = weak_clusters(graph, cfg.cluster);
    auto strong = strong_clusters(graph, cfg.cluster);
    auto census = cluster_census(weak, strong, ingest.active_users);
    auto ties = ctup_pairs(graph, cfg.cluster);

    auto root = jsonw::Value::object();
    root.set("tool", kToolName);
    root.set("version", kToolVersion);
    root.set("config_hash", config_hash(cfg));

    auto ing = jsonw::Value::object();
    ing.set("total_records", ingest.post_count + ingest.comment_count);
    ing.set("post_count", ingest.post_count);
    ing.set("comment_count", ingest.comment_count);
    ing.set("total_users", ingest.total_users);
    ing.set("active_users", ingest.active_users);
    ing.set("active_user_fraction",
            ingest.total_users ? static_cast<double>(ingest.active_users) /
                                     static_cast<double>(ingest.total_users)
                               : 0.0);
    ing.set("dropped_rows", ingest.dropped_rows);
    auto reasons = jsonw::Value::object();
    for (const auto& [reason, count] : ingest.dropped_reasons) reasons.set(reason, count);
    ing.set("dropped_reasons", std::move(reasons));
    ing.set("min_created", ingest.min_created);
    ing.set("max_created", ingest.max_created);
    ing.set("unresolved_parents", resolve.unresolved);
    root.set("ingest", std::move(ing));

    auto g = jsonw::Value::object();
    g.set("nodes", graph.node_count());
    g.set("edges", graph.edge_count());
    g.set("total_weight", graph.total_weight());
    auto months = jsonw::Value::array();
    for (const auto& [month, slice] : slices) months.push(month);
    g.set("months", std::move(months));
    if (!graph.empty()) {
        auto top = influencer(graph);
        auto inf = jsonw::Value::object();
        inf.set("user", top.user);
        inf.set("in_weight", top.in_weight);
        inf.set("out_weight", top.out_weight);
        inf.set("total_weight", top.total_weight());
        g.set("influencer", std::move(inf));
    }
    root.set("graph", std::move(g));

    auto cl = jsonw::Value::object();
    cl.set("weak_count", census.wc_count);
    cl.set("strong_count", census.sc_count);
    cl.set("largest_weak", census.largest_wc);
    cl.set("largest_strong", census.largest_sc);
    auto hist = jsonw::Value::array();
    for (const auto& [size, counts] : census.size_histogram) {
        auto row = jsonw::Value::object();
        row.set("size", size);
        row.set("weak", counts.first);
        row.set("strong", counts.second);
        hist.push(std::move(row));
    }
    cl.set("size_histogram", std::move(hist));
    cl.set("unclustered", census.unclustered_count);
    cl.set("largest_weak_active_share", census.largest_wc_active_share);
    cl.set("unclustered_active_share", census.unclustered_active_share);
    cl.set("ctup_pairs", static_cast<std::uint64_t>(ties.size()));
    auto top_ties = jsonw::Value::array();
    for (std::size_t i = 0; i < ties.size() && i < cfg.top_k; ++i) {
        auto row = jsonw::Value::object();
        row.set("user_i", ties[i].user_i);
        row.set("user_j", ties[i].user_j);
        row.set("c_ij", ties[i].c_ij);
        row.set("c_ji", ties[i].c_ji);
        row.set("tie_score", ties[i].tie_score);
        top_ties.push(std::move(row));
    }
    cl.set("top_tie_pairs", std::move(top_ties));
    root.set("clusters", std::move(cl));

    auto conc = jsonw::Value::array();
    for (double p : cfg.concentration_ps) {
        auto c = concentration(records, p);
        auto row = jsonw::Value::object();
        row.set("p", c.p);
        row.set("users", c.users);
        row.set("fraction", c.fraction);
        conc.push(std::move(row));
    }
    root.set("concentration", std::move(conc));

    auto by_month = jsonw::Value::array();
    for (const auto& [month, slice] : slices) {
        auto top = influencer(slice);
        auto row = jsonw::Value::object();
        row.set("month", month);
        row.set("user", top.user);
        row.set("total_weight", top.total_weight());
        by_month.push(std::move(row));
    }
    root.set("influencers_by_month", std::move(by_month));

    auto activity = rank_users(records, RankMetric::activity, cfg.top_k);
    auto downs = rank_users(records, RankMetric::downvotes, cfg.top_k);
    auto ups = rank_users(records, RankMetric::upvotes, cfg.top_k);
    auto rankings = jsonw::Value::object();
    rankings.set("activity", ranking_json(activity));
    rankings.set("downvotes", ranking_json(downs));
    rankings.set("upvotes", ranking_json(ups));
    root.set("rankings", std::move(rankings));

    auto ov = jsonw::Value::object();
    ov.set("activity_downvotes", overlap(ranking_users(activity), ranking_users(downs)));
    ov.set("activity_upvotes", overlap(ranking_users(activity), ranking_users(ups)));
    ov.set("upvotes_downvotes", overlap(ranking_users(ups), ranking_users(downs)));
    root.set("ranking_overlap", std::move(ov));

    auto senti = sentiment_summary(records);
    auto sj = jsonw::Value::object();
    sj.set("positive_fraction", senti.positive_fraction);
    sj.set("negative_fraction", senti.negative_fraction);
    sj.set("neutral_fraction", senti.neutral_fraction);
    sj.set("labeled", senti.labeled);
    sj.set("unknown", senti.unknown);
    root.set("sentiment", std::move(sj));

    std::vector<std::string> corpus;
    for (const auto& r : records) {
        if (!r.title.empty()) corpus.push_back(r.title);
        if (!r.body.empty()) corpus.push_back(r.body);
    }
    auto kw = jsonw::Value::array();
    auto keywords = extract_keywords(corpus, cfg.top_k);
    for (std::size_t i = 0; i < keywords.size(); ++i) {
        auto row = jsonw::Value::object();
        row.set("rank", static_cast<std::uint64_t>(i + 1));
        row.set("phrase", keywords[i].phrase);
        row.set("score", keywords[i].score);
        row.set("frequency", keywords[i].frequency);
        kw.push(std::move(row));
    }
    root.set("keywords", std::move(kw));

    return root;
}

} // namespace uigkit
