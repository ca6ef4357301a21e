#ifndef UIGKIT_INGEST_HPP
#define UIGKIT_INGEST_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "uigkit/record.hpp"

namespace uigkit {

// Maps InteractionRecord fields to dump column names. Defaults match the
// common dump header. author, created, item_id and parent_id must resolve
// to existing columns; the rest fall back to defaults when their column
// is absent.
struct SchemaConfig {
    std::string author = "Author";
    std::string author_id = "author_fullname";
    std::string created = "created";
    std::string ups = "ups";
    std::string downs = "downs";
    std::string score = "Score";
    std::string item_id = "post_id";
    std::string parent_id = "parent_id";
    std::string permalink = "permalink";
    std::string body = "post";
    std::string title = "title";
    std::string parent_author = "Parent_post_author";
    std::string sentiment = "sentiment";
};

struct DroppedRow {
    std::uint64_t row_number = 0; // 1-based data row index, header excluded
    std::string reason;
};

struct ParseResult {
    std::vector<InteractionRecord> records;
    std::vector<DroppedRow> dropped;
};

struct IngestReport {
    std::uint64_t total_users = 0;  // distinct authors incl. parent_author
    std::uint64_t active_users = 0; // distinct authors of >= 1 record
    std::uint64_t post_count = 0;
    std::uint64_t comment_count = 0;
    std::uint64_t dropped_rows = 0;
    std::map<std::string, std::uint64_t> dropped_reasons;
    std::int64_t min_created = 0;
    std::int64_t max_created = 0;
};

// One resolved comment -> parent-author interaction.
struct InteractionPair {
    std::string commenter;
    std::string parent_author;
    std::string month_key;

    bool operator==(const InteractionPair&) const = default;
};

struct ResolveResult {
    std::vector<InteractionPair> pairs;
    std::uint64_t unresolved = 0;
};

// Parses a CSV dump. Rows with deleted/empty authors, unparseable
// timestamps, missing item ids or duplicate item ids are dropped and
// logged; row order is preserved. Throws DataError if a required column
// is missing from the header.
ParseResult parse_records(std::istream& in, const SchemaConfig& schema = {});
ParseResult parse_records_file(const std::string& path, const SchemaConfig& schema = {});

// For each comment, emits (commenter, parent author). Resolution prefers
// the record's parent_author field and falls back to an item_id index
// over parent_id (stripping a leading tN_ type prefix). Comments whose
// parent cannot be resolved are counted and skipped.
ResolveResult resolve_parents(const std::vector<InteractionRecord>& records);

IngestReport validate_dataset(const std::vector<InteractionRecord>& records);

// Same, with the parse-time dropped-row log folded into the report so
// that post_count + comment_count + dropped_rows equals the input row
// count.
IngestReport validate_dataset(const std::vector<InteractionRecord>& records,
                              const std::vector<DroppedRow>& dropped);

// Canonical CSV serialization of records (the 13 tracked columns with
// their default header names). parse_records on the output reproduces
// the records exactly.
void write_records_csv(std::ostream& out, const std::vector<InteractionRecord>& records);

void write_dropped_csv(std::ostream& out, const std::vector<DroppedRow>& dropped);

} // namespace uigkit

#endif
