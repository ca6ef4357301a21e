#ifndef UIGKIT_RECORD_HPP
#define UIGKIT_RECORD_HPP

#include <cstdint>
#include <string>

namespace uigkit {

enum class Sentiment { positive, negative, neutral, unknown };

const char* to_string(Sentiment s);
Sentiment sentiment_from_string(const std::string& s);

// One post or comment row from a platform dump. A record is a post iff
// parent_id is empty, otherwise it is a comment.
struct InteractionRecord {
    std::string author;
    std::string author_id;
    std::int64_t created = 0; // UTC epoch seconds
    std::int64_t ups = 0;
    std::int64_t downs = 0;
    std::int64_t score = 0;
    std::string item_id;
    std::string parent_id;
    std::string permalink;
    std::string body;
    std::string title; // posts only, empty for comments
    std::string parent_author;
    std::string month_key; // "YYYY-MM", derived from created in UTC
    Sentiment sentiment = Sentiment::unknown;

    bool is_post() const { return parent_id.empty(); }
    bool is_comment() const { return !parent_id.empty(); }

    bool operator==(const InteractionRecord&) const = default;
};

// Calendar month of a UTC timestamp, formatted "YYYY-MM".
std::string month_key_of(std::int64_t created_utc);

} // namespace uigkit

#endif
