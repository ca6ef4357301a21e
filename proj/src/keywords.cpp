#include "uigkit/keywords.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>
#include <unordered_set>

#include "uigkit/csv.hpp"
#include "uigkit/errors.hpp"

namespace uigkit {

namespace {

const std::unordered_set<std::string>& stopwords() {
    static const std::unordered_set<std::string> words = {
        "a", "about", "above", "after", "again", "against", "all", "am", "an",
        "and", "any", "are", "aren't", "as", "at", "be", "because", "been",
        "before", "being", "below", "between", "both", "but", "by", "can",
        "can't", "cannot", "could", "couldn't", "did", "didn't", "do", "does",
        "doesn't", "doing", "don't", "down", "during", "each", "few", "for",
        "from", "further", "had", "hadn't", "has", "hasn't", "have", "haven't",
        "having", "he", "her", "here", "hers", "herself", "him", "himself",
        "his", "how", "i", "i'm", "i've", "if", "in", "into", "is", "isn't",
        "it", "it's", "its", "itself", "just", "me", "more", "most", "my",
        "myself", "no", "nor", "not", "of", "off", "on", "once", "only", "or",
        "other", "our", "ours", "ourselves", "out", "over", "own", "same",
        "she", "should", "shouldn't", "so", "some", "such", "than", "that",
        "that's", "the", "their", "theirs", "them", "themselves", "then",
        "there", "these", "they", "this", "those", "through", "to", "too",
        "under", "until", "up", "very", "was", "wasn't", "we", "were",
        "weren't", "what", "when", "where", "which", "while", "who", "whom",
        "why", "will", "with", "won't", "would", "wouldn't", "you", "your",
        "yours", "yourself", "yourselves",
    };
    return words;
}

bool is_word_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '\'' || c == '-';
}

std::string trim_edges(const std::string& token) {
    std::size_t b = 0, e = token.size();
    while (b < e && (token[b] == '\'' || token[b] == '-')) ++b;
    while (e > b && (token[e - 1] == '\'' || token[e - 1] == '-')) --e;
    return token.substr(b, e - b);
}

// Chunks of tokens: a chunk ends at any character outside [a-z0-9'- ]
// and at tokens that trim to nothing (e.g. a bare "--").
std::vector<std::vector<std::string>> tokenize(const std::vector<std::string>& texts) {
    std::vector<std::vector<std::string>> chunks;
    std::vector<std::string> current;
    std::string token;
    auto flush_token = [&]() {
        if (token.empty()) return;
        std::string t = trim_edges(token);
        token.clear();
        if (t.empty()) {
            if (!current.empty()) chunks.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(std::move(t));
        }
    };
    auto flush_chunk = [&]() {
        flush_token();
        if (!current.empty()) chunks.push_back(std::move(current));
        current.clear();
    };
    for (const auto& text : texts) {
        for (char raw : text) {
            char c = raw;
            if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
            if (is_word_char(c)) {
                token.push_back(c);
            } else if (c == ' ') {
                flush_token();
            } else {
                flush_chunk();
            }
        }
        flush_chunk(); // texts never join into one phrase
    }
    return chunks;
}

struct Candidate {
    std::uint64_t freq = 0;
    std::uint64_t first_pos = 0;
    std::size_t len = 0;
    std::uint64_t chunk_count = 0;
    std::size_t last_chunk = SIZE_MAX;
};

} // namespace

bool is_stopword(const std::string& token) { return stopwords().count(token) > 0; }

std::vector<KeywordScore> extract_keywords(const std::vector<std::string>& texts,
                                           std::size_t k) {
    if (k == 0) throw UsageError("keyword count must be positive");
    auto chunks = tokenize(texts);
    if (chunks.empty()) return {};

    std::uint64_t total_tokens = 0;
    for (const auto& c : chunks) total_tokens += c.size();
    const std::size_t total_chunks = chunks.size();

    std::unordered_map<std::string, Candidate> candidates;
    std::uint64_t pos = 0;
    for (std::size_t ci = 0; ci < chunks.size(); ++ci) {
        const auto& toks = chunks[ci];
        for (std::size_t i = 0; i < toks.size(); ++i, ++pos) {
            if (is_stopword(toks[i])) continue;
            std::string phrase = toks[i];
            for (std::size_t len = 1; len <= 3 && i + len <= toks.size(); ++len) {
                if (len > 1) phrase += ' ', phrase += toks[i + len - 1];
                if (is_stopword(toks[i + len - 1])) continue; // no stopword tail
                auto [it, inserted] = candidates.try_emplace(phrase);
                Candidate& c = it->second;
                if (inserted) {
                    c.first_pos = pos;
                    c.len = len;
                }
                ++c.freq;
                if (c.last_chunk != ci) {
                    c.last_chunk = ci;
                    ++c.chunk_count;
                }
            }
        }
    }

    std::vector<KeywordScore> scored;
    scored.reserve(candidates.size());
    for (const auto& [phrase, c] : candidates) {
        double position = static_cast<double>(c.first_pos) / static_cast<double>(total_tokens);
        double spread = static_cast<double>(c.chunk_count) / static_cast<double>(total_chunks);
        double score = (1.0 + position) /
                       (static_cast<double>(c.freq * c.len) * (1.0 + spread));
        scored.push_back({phrase, score, c.freq});
    }
    std::sort(scored.begin(), scored.end(), [](const KeywordScore& a, const KeywordScore& b) {
        if (a.score != b.score) return a.score < b.score;
        return a.phrase < b.phrase;
    });
    if (scored.size() > k) scored.resize(k);
    return scored;
}

void write_keywords_csv(std::ostream& out, const std::vector<KeywordScore>& keywords) {
    out << "rank,phrase,score,frequency\n";
    for (std::size_t i = 0; i < keywords.size(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4f", keywords[i].score);
        csv::write_row(out, {std::to_string(i + 1), keywords[i].phrase, buf,
                             std::to_string(keywords[i].frequency)});
    }
}

} // namespace uigkit
