#ifndef UIGKIT_KEYWORDS_HPP
#define UIGKIT_KEYWORDS_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace uigkit {

struct KeywordScore {
    std::string phrase; // lowercased, 1-3 words
    double score = 0.0; // lower = more relevant
    std::uint64_t frequency = 0;
};

// Unsupervised statistical keyword extraction over a corpus of texts
// (one string per title or body, in dump order).
//
// Texts are lowercased and split into chunks at any character outside
// [a-z0-9'- ]; tokens are space-separated runs with edge apostrophes
// and hyphens trimmed. Candidate phrases are 1-3 token windows within
// a chunk that neither start nor end with a stopword. Each candidate
// is scored
//
//   (1 + first_pos/total_tokens) / (freq * len * (1 + chunks/total_chunks))
//
// where first_pos is the global index of the first occurrence, freq the
// occurrence count, len the word count, and chunks the number of
// distinct chunks containing the phrase. Low score = high relevance:
// frequent, early, widely spread, longer phrases win. Returns the top-k
// by (score, phrase) ascending; deterministic for a given corpus order.
// Empty corpus yields an empty list. Throws UsageError when k == 0.
std::vector<KeywordScore> extract_keywords(const std::vector<std::string>& texts,
                                           std::size_t k);

bool is_stopword(const std::string& token);

void write_keywords_csv(std::ostream& out, const std::vector<KeywordScore>& keywords);

} // namespace uigkit

#endif
