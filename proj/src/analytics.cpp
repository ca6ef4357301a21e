#include "uigkit/analytics.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "uigkit/csv.hpp"
#include "uigkit/errors.hpp"

namespace uigkit {

const char* to_string(RankMetric m) {
    switch (m) {
    case RankMetric::upvotes: return "upvotes";
    case RankMetric::activity: return "activity";
    case RankMetric::downvotes: return "downvotes";
    }
    return "activity";
}

RankMetric rank_metric_from_string(const std::string& s) {
    if (s == "upvotes") return RankMetric::upvotes;
    if (s == "activity") return RankMetric::activity;
    if (s == "downvotes") return RankMetric::downvotes;
    throw UsageError("unknown ranking metric: '" + s +
                     "' (expected upvotes, activity, or downvotes)");
}

namespace {

std::vector<RankingEntry> take_top(std::map<std::string, std::int64_t>& totals,
                                   RankMetric metric, std::size_t k, bool ascending) {
    std::vector<std::pair<std::string, std::int64_t>> rows(totals.begin(), totals.end());
    std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        if (a.second != b.second) return ascending ? a.second < b.second : a.second > b.second;
        return a.first < b.first;
    });
    if (rows.size() > k) rows.resize(k);
    std::vector<RankingEntry> out;
    out.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        out.push_back({rows[i].first, metric, rows[i].second,
                       static_cast<std::uint32_t>(i + 1)});
    return out;
}

} // namespace

std::vector<RankingEntry> rank_users(const std::vector<InteractionRecord>& records,
                                     RankMetric metric, std::size_t k) {
    if (k == 0) throw UsageError("ranking size must be positive");
    std::map<std::string, std::int64_t> totals;
    for (const auto& r : records) {
        std::int64_t v = 0;
        switch (metric) {
        case RankMetric::upvotes: v = r.ups; break;
        case RankMetric::activity: v = 1; break;
        case RankMetric::downvotes: v = r.downs; break;
        }
        totals[r.author] += v;
    }
    return take_top(totals, metric, k, /*ascending=*/false);
}

std::vector<RankingEntry> rank_users_lowest_score(const std::vector<InteractionRecord>& records,
                                                  std::size_t k) {
    if (k == 0) throw UsageError("ranking size must be positive");
    std::map<std::string, std::int64_t> totals;
    for (const auto& r : records) totals[r.author] += r.score;
    return take_top(totals, RankMetric::downvotes, k, /*ascending=*/true);
}

HeatmapMatrix interaction_heatmap(const UserInteractionGraph& graph,
                                  const std::vector<std::string>& users) {
    if (users.empty()) throw UsageError("heatmap needs at least one user");
    HeatmapMatrix m;
    m.users = users;
    m.cells.assign(users.size(), std::vector<std::uint64_t>(users.size(), 0));
    std::unordered_set<std::string> seen;
    for (std::size_t a = 0; a < users.size(); ++a) {
        if (!seen.insert(users[a]).second)
            throw UsageError("duplicate user in heatmap list: " + users[a]);
        if (!graph.find(users[a]) && std::find(m.missing_users.begin(), m.missing_users.end(),
                                               users[a]) == m.missing_users.end())
            m.missing_users.push_back(users[a]);
        for (std::size_t b = 0; b < users.size(); ++b)
            m.cells[a][b] = graph.weight(users[a], users[b]);
    }
    return m;
}

double overlap(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.empty() || b.empty()) throw UsageError("overlap of an empty ranking is undefined");
    std::unordered_set<std::string> sa(a.begin(), a.end());
    std::unordered_set<std::string> sb(b.begin(), b.end());
    std::uint64_t common = 0;
    for (const auto& u : sa)
        if (sb.count(u)) ++common;
    std::uint64_t denom = std::max(sa.size(), sb.size());
    return static_cast<double>(common) / static_cast<double>(denom);
}

Concentration concentration(const std::vector<InteractionRecord>& records, double p) {
    if (!(p > 0.0) || p > 1.0)
        throw UsageError("concentration threshold must be in (0, 1]");
    if (records.empty()) throw DataError("concentration over an empty dataset");
    std::map<std::string, std::uint64_t> counts;
    for (const auto& r : records) ++counts[r.author];
    std::vector<std::pair<std::string, std::uint64_t>> rows(counts.begin(), counts.end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    const auto total = static_cast<std::uint64_t>(records.size());
    std::uint64_t acc = 0;
    Concentration c;
    c.p = p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        acc += rows[i].second;
        if (static_cast<double>(acc) >= p * static_cast<double>(total)) {
            c.users = i + 1;
            break;
        }
    }
    if (c.users == 0) c.users = rows.size(); // guard against FP edge at p == 1
    c.fraction = static_cast<double>(c.users) / static_cast<double>(rows.size());
    return c;
}

SentimentSummary sentiment_summary(const std::vector<InteractionRecord>& records) {
    SentimentSummary s;
    std::uint64_t pos = 0, neg = 0, neu = 0;
    for (const auto& r : records) {
        switch (r.sentiment) {
        case Sentiment::positive: ++pos; break;
        case Sentiment::negative: ++neg; break;
        case Sentiment::neutral: ++neu; break;
        case Sentiment::unknown: ++s.unknown; break;
        }
    }
    s.labeled = pos + neg + neu;
    if (s.labeled > 0) {
        s.positive_fraction = static_cast<double>(pos) / static_cast<double>(s.labeled);
        s.negative_fraction = static_cast<double>(neg) / static_cast<double>(s.labeled);
        s.neutral_fraction = static_cast<double>(neu) / static_cast<double>(s.labeled);
    }
    return s;
}

void write_ranking_csv(std::ostream& out, const std::vector<RankingEntry>& entries) {
    out << "rank,user,metric,value\n";
    for (const auto& e : entries)
        csv::write_row(out, {std::to_string(e.rank), e.user, to_string(e.metric),
                             std::to_string(e.value)});
}

void write_heatmap_csv(std::ostream& out, const HeatmapMatrix& matrix) {
    std::vector<std::string> header;
    header.push_back("user");
    for (const auto& u : matrix.users) header.push_back(u);
    csv::write_row(out, header);
    for (std::size_t a = 0; a < matrix.users.size(); ++a) {
        std::vector<std::string> row;
        row.push_back(matrix.users[a]);
        for (std::size_t b = 0; b < matrix.users.size(); ++b)
            row.push_back(std::to_string(matrix.cells[a][b]));
        csv::write_row(out, row);
    }
}

} // namespace uigkit
