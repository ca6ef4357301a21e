#ifndef UIGKIT_REPORT_HPP
#define UIGKIT_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "uigkit/cluster.hpp"
#include "uigkit/ingest.hpp"
#include "uigkit/json_writer.hpp"

namespace uigkit {

// Everything that influences computed numbers. Paths are reduced to
// basenames inside the config hash so a report is relocatable.
struct RunConfig {
    std::vector<std::string> inputs;
    std::string out_dir = ".";
    std::vector<std::string> months; // empty = all
    std::size_t top_k = 10;
    ClusterConfig cluster;
    std::vector<double> concentration_ps = {0.25, 0.5};
};

// FNV-1a, 64-bit, over the canonical key=value rendering of cfg;
// 16 lowercase hex digits.
std::string config_hash(const RunConfig& cfg);
std::uint64_t fnv1a64(const std::string& data);
std::string canonical_config_string(const RunConfig& cfg);

// Runs ingestion-to-analytics over already-parsed records and assembles
// the summary document: ingest counts, graph stats, cluster census and
// shares, concentration, per-month influencers, top-k rankings with
// pairwise overlap, sentiment fractions, and top keywords. Community
// detection is intentionally not part of the summary (it has its own
// subcommand and cost profile). Byte-stable: equal inputs and config
// produce identical JSON.
jsonw::Value build_summary_report(const std::vector<InteractionRecord>& records,
                                  const IngestReport& ingest,
                                  const RunConfig& cfg);

} // namespace uigkit

#endif
