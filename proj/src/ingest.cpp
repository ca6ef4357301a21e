#include "uigkit/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "uigkit/csv.hpp"
#include "uigkit/errors.hpp"

namespace uigkit {

const char* to_string(Sentiment s) {
    switch (s) {
    case Sentiment::positive: return "positive";
    case Sentiment::negative: return "negative";
    case Sentiment::neutral: return "neutral";
    default: return "unknown";
    }
}

Sentiment sentiment_from_string(const std::string& s) {
    std::string lower;
    lower.reserve(s.size());
    for (char c : s)
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "positive")
        return Sentiment::positive;
    if (lower == "negative")
        return Sentiment::negative;
    if (lower == "neutral")
        return Sentiment::neutral;
    return Sentiment::unknown;
}

std::string month_key_of(std::int64_t created_utc) {
    using namespace std::chrono;
    sys_seconds ts{seconds{created_utc}};
    year_month_day ymd{floor<days>(ts)};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()));
    return buf;
}

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

bool is_deleted_author(const std::string& name) {
    return name.empty() || name == "[deleted]";
}

// Accepts integer or float-formatted epoch seconds; truncates toward zero.
bool parse_epoch(const std::string& s, std::int64_t& out) {
    if (s.empty())
        return false;
    const char* begin = s.c_str();
    char* end = nullptr;
    errno = 0;
    long long v = std::strtoll(begin, &end, 10);
    if (errno == 0 && end != begin && *end == '\0') {
        out = v;
        return true;
    }
    errno = 0;
    double d = std::strtod(begin, &end);
    if (errno != 0 || end == begin || *end != '\0' || !std::isfinite(d))
        return false;
    out = static_cast<std::int64_t>(std::trunc(d));
    return true;
}

std::int64_t parse_int_or_zero(const std::string& s) {
    if (s.empty())
        return 0;
    const char* begin = s.c_str();
    char* end = nullptr;
    errno = 0;
    long long v = std::strtoll(begin, &end, 10);
    if (errno != 0 || end == begin)
        return 0;
    return v;
}

// Index of a column name in the header, or -1.
int column_index(const std::vector<std::string>& header, const std::string& name) {
    for (size_t i = 0; i < header.size(); ++i)
        if (header[i] == name)
            return static_cast<int>(i);
    return -1;
}

std::string strip_type_prefix(const std::string& id) {
    if (id.size() >= 3 && id[0] == 't' &&
        std::isdigit(static_cast<unsigned char>(id[1])) && id[2] == '_')
        return id.substr(3);
    return id;
}

} // namespace

ParseResult parse_records(std::istream& in, const SchemaConfig& schema) {
    if (!in)
        throw DataError("cannot read input stream");

    csv::Reader reader(in);
    std::vector<std::string> header;
    if (!reader.next(header))
        throw DataError("empty input: missing CSV header");
    for (auto& h : header)
        h = trim(h);

    struct Columns {
        int author, author_id, created, ups, downs, score;
        int item_id, parent_id, permalink, body, title, parent_author, sentiment;
    } col{};
    col.author = column_index(header, schema.author);
    col.author_id = column_index(header, schema.author_id);
    col.created = column_index(header, schema.created);
    col.ups = column_index(header, schema.ups);
    col.downs = column_index(header, schema.downs);
    col.score = column_index(header, schema.score);
    col.item_id = column_index(header, schema.item_id);
    col.parent_id = column_index(header, schema.parent_id);
    col.permalink = column_index(header, schema.permalink);
    col.body = column_index(header, schema.body);
    col.title = column_index(header, schema.title);
    col.parent_author = column_index(header, schema.parent_author);
    col.sentiment = column_index(header, schema.sentiment);

    std::vector<std::string> missing;
    if (col.author < 0)
        missing.push_back(schema.author);
    if (col.created < 0)
        missing.push_back(schema.created);
    if (col.item_id < 0)
        missing.push_back(schema.item_id);
    if (col.parent_id < 0)
        missing.push_back(schema.parent_id);
    if (!missing.empty()) {
        std::string msg = "malformed header: missing column(s):";
        for (const auto& m : missing)
            msg += " " + m;
        throw DataError(msg);
    }

    ParseResult result;
    std::unordered_set<std::string> seen_ids;
    std::vector<std::string> row;
    std::uint64_t row_number = 0;

    auto get = [&row](int idx) -> std::string {
        if (idx < 0 || static_cast<size_t>(idx) >= row.size())
            return {};
        return row[static_cast<size_t>(idx)];
    };

    while (reader.next(row)) {
        ++row_number;
        if (row.size() != header.size()) {
            result.dropped.push_back({row_number, "malformed_row"});
            continue;
        }

        InteractionRecord rec;
        rec.author = trim(get(col.author));
        if (is_deleted_author(rec.author)) {
            result.dropped.push_back({row_number, "deleted_author"});
            continue;
        }
        if (!parse_epoch(trim(get(col.created)), rec.created)) {
            result.dropped.push_back({row_number, "bad_timestamp"});
            continue;
        }
        rec.item_id = trim(get(col.item_id));
        if (rec.item_id.empty()) {
            result.dropped.push_back({row_number, "missing_item_id"});
            continue;
        }
        if (!seen_ids.insert(rec.item_id).second) {
            result.dropped.push_back({row_number, "duplicate_id"});
            continue;
        }

        rec.author_id = trim(get(col.author_id));
        rec.ups = std::max<std::int64_t>(0, parse_int_or_zero(trim(get(col.ups))));
        rec.downs = std::max<std::int64_t>(0, parse_int_or_zero(trim(get(col.downs))));
        rec.score = parse_int_or_zero(trim(get(col.score)));
        rec.parent_id = trim(get(col.parent_id));
        rec.permalink = trim(get(col.permalink));
        rec.body = get(col.body);
        rec.title = get(col.title);
        rec.parent_author = trim(get(col.parent_author));
        if (is_deleted_author(rec.parent_author))
            rec.parent_author.clear();
        rec.sentiment = sentiment_from_string(trim(get(col.sentiment)));
        rec.month_key = month_key_of(rec.created);

        result.records.push_back(std::move(rec));
    }
    return result;
}

ParseResult parse_records_file(const std::string& path, const SchemaConfig& schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot open input file: " + path);
    return parse_records(in, schema);
}

ResolveResult resolve_parents(const std::vector<InteractionRecord>& records) {
    std::unordered_map<std::string, const std::string*> author_by_item;
    author_by_item.reserve(records.size());
    for (const auto& rec : records)
        author_by_item.emplace(rec.item_id, &rec.author);

    ResolveResult result;
    for (const auto& rec : records) {
        if (!rec.is_comment())
            continue;
        if (!rec.parent_author.empty()) {
            result.pairs.push_back({rec.author, rec.parent_author, rec.month_key});
            continue;
        }
        auto it = author_by_item.find(rec.parent_id);
        if (it == author_by_item.end())
            it = author_by_item.find(strip_type_prefix(rec.parent_id));
        if (it == author_by_item.end()) {
            ++result.unresolved;
            continue;
        }
        result.pairs.push_back({rec.author, *it->second, rec.month_key});
    }
    return result;
}

IngestReport validate_dataset(const std::vector<InteractionRecord>& records) {
    IngestReport report;
    std::unordered_set<std::string> all_users;
    std::unordered_set<std::string> active;
    bool first = true;
    for (const auto& rec : records) {
        all_users.insert(rec.author);
        active.insert(rec.author);
        if (!rec.parent_author.empty())
            all_users.insert(rec.parent_author);
        if (rec.is_post())
            ++report.post_count;
        else
            ++report.comment_count;
        if (first || rec.created < report.min_created)
            report.min_created = rec.created;
        if (first || rec.created > report.max_created)
            report.max_created = rec.created;
        first = false;
    }
    report.total_users = all_users.size();
    report.active_users = active.size();
    return report;
}

IngestReport validate_dataset(const std::vector<InteractionRecord>& records,
                              const std::vector<DroppedRow>& dropped) {
    IngestReport report = validate_dataset(records);
    report.dropped_rows = dropped.size();
    for (const auto& d : dropped)
        ++report.dropped_reasons[d.reason];
    return report;
}

void write_records_csv(std::ostream& out, const std::vector<InteractionRecord>& records) {
    csv::write_row(out, {"Author", "author_fullname", "created", "downs", "ups",
                         "post_id", "parent_id", "permalink", "Score", "post",
                         "title", "Parent_post_author", "sentiment"});
    for (const auto& rec : records) {
        csv::write_row(out, {rec.author, rec.author_id, std::to_string(rec.created),
                             std::to_string(rec.downs), std::to_string(rec.ups),
                             rec.item_id, rec.parent_id, rec.permalink,
                             std::to_string(rec.score), rec.body, rec.title,
                             rec.parent_author, to_string(rec.sentiment)});
    }
}

void write_dropped_csv(std::ostream& out, const std::vector<DroppedRow>& dropped) {
    csv::write_row(out, {"row_number", "reason"});
    for (const auto& d : dropped)
        csv::write_row(out, {std::to_string(d.row_number), d.reason});
}

} // namespace uigkit
