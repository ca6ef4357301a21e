#ifndef UIGKIT_ANALYTICS_HPP
#define UIGKIT_ANALYTICS_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "uigkit/graph.hpp"
#include "uigkit/ingest.hpp"

namespace uigkit {

enum class RankMetric { upvotes, activity, downvotes };

const char* to_string(RankMetric m);
RankMetric rank_metric_from_string(const std::string& s);

struct RankingEntry {
    std::string user;
    RankMetric metric = RankMetric::activity;
    std::int64_t value = 0;
    std::uint32_t rank = 0; // 1-based
};

// Top-k users by the metric (upvotes: sum of ups; activity: record
// count; downvotes: sum of downs), descending, ties broken by username.
// Throws UsageError when k <= 0.
std::vector<RankingEntry> rank_users(const std::vector<InteractionRecord>& records,
                                     RankMetric metric, std::size_t k);

// Fallback ranking for dumps whose downs column is all zero: users by
// lowest score sum, ascending. Entries carry metric downvotes and the
// score sum as value.
std::vector<RankingEntry> rank_users_lowest_score(const std::vector<InteractionRecord>& records,
                                                  std::size_t k);

struct HeatmapMatrix {
    std::vector<std::string> users;
    std::vector<std::vector<std::uint64_t>> cells; // cells[a][b]: users[a] -> users[b]
    std::vector<std::string> missing_users;        // requested but absent from the graph
};

// cell[a][b] = weight of the edge users[a] -> users[b] (0 when absent).
// Users missing from the graph get zero rows/columns and are listed in
// missing_users. Throws UsageError on an empty user list.
HeatmapMatrix interaction_heatmap(const UserInteractionGraph& graph,
                                  const std::vector<std::string>& users);

// |A ∩ B| / max(|A|, |B|). Throws UsageError when either list is empty.
double overlap(const std::vector<std::string>& a, const std::vector<std::string>& b);

struct Concentration {
    double p = 0.0;
    std::uint64_t users = 0; // minimal prefix size
    double fraction = 0.0;   // users / active user count
};

// Smallest fraction of active users (sorted by activity, descending)
// whose combined activity reaches at least p of all records. Throws
// UsageError for p outside (0, 1], DataError when there are no records.
Concentration concentration(const std::vector<InteractionRecord>& records, double p);

struct SentimentSummary {
    double positive_fraction = 0.0;
    double negative_fraction = 0.0;
    double neutral_fraction = 0.0;
    std::uint64_t labeled = 0;
    std::uint64_t unknown = 0;
};

// Fractions over labeled records; unknown rows are excluded from the
// denominator but counted.
SentimentSummary sentiment_summary(const std::vector<InteractionRecord>& records);

void write_ranking_csv(std::ostream& out, const std::vector<RankingEntry>& entries);
void write_heatmap_csv(std::ostream& out, const HeatmapMatrix& matrix);

} // namespace uigkit

#endif
