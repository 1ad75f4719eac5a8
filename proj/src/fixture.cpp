#include "topicsum/fixture.hpp"

#include <array>
#include <random>
#include <string>
#include <vector>

#include "topicsum/rand_util.hpp"

namespace topicsum {
namespace {

struct TopicPool {
    const char* label;
    // First two entries are anchors and appear in every sentence.
    std::array<const char*, 8> words;
};

constexpr std::array<TopicPool, 6> kPools = {{
    {"politics",
     {"policy", "president", "state", "political", "vote", "law", "country", "election"}},
    {"sports",
     {"game", "team", "sport", "football", "player", "league", "soccer", "coach"}},
    {"health",
     {"patient", "insurance", "coverage", "insurer", "plan", "care", "hospital",
      "doctor"}},
    {"education",
     {"student", "school", "college", "teacher", "loan", "test", "score", "classroom"}},
    {"movies",
     {"film", "movie", "season", "episode", "character", "series", "director", "story"}},
    {"space",
     {"earth", "mission", "asteroid", "planet", "comet", "orbit", "rocket", "telescope"}},
}};

constexpr std::array<const char*, 10> kCommonPool = {
    "people", "year", "time", "report", "week", "city", "group", "number", "world",
    "part"};

constexpr std::size_t kDocsPerTopic = 25;

// %A/%B anchors, %T a non-anchor topic word, %C a common word. Frame glue is
// kept disjoint from every pool so idf can push it down.
constexpr std::array<const char*, 6> kFrames = {
    "The %A and the %B drew a %T crowd this %C.",
    "A %T update kept the %A near the %B all %C.",
    "Fans of the %A said the %B made a %T splash this %C.",
    "Every %C brought fresh %T news about the %A and the %B.",
    "The %A stayed ahead of the %B in a busy %T %C.",
    "Another %T note tied the %A to the %B this %C.",
};

constexpr std::array<const char*, 2> kSummaryFrames = {
    "The %A and the %B defined the %T this %C.",
    "A %T recap put the %A beside the %B this %C.",
};

std::string fill_frame(const char* frame, const TopicPool& pool,
                       std::mt19937_64& rng) {
    std::string out;
    for (const char* p = frame; *p; ++p) {
        if (*p != '%') {
            out += *p;
            continue;
        }
        ++p;
        switch (*p) {
            case 'A': out += pool.words[0]; break;
            case 'B': out += pool.words[1]; break;
            case 'T': out += pool.words[2 + bounded(rng, pool.words.size() - 2)]; break;
            case 'C': out += kCommonPool[bounded(rng, kCommonPool.size())]; break;
            default: out += *p;
        }
    }
    return out;
}

}  // namespace

Corpus generate_fixture(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Document> docs;
    docs.reserve(kPools.size() * kDocsPerTopic);
    for (const TopicPool& pool : kPools) {
        for (std::size_t k = 0; k < kDocsPerTopic; ++k) {
            Document doc;
            doc.id = std::string(pool.label) + "-" + (k < 10 ? "0" : "") + std::to_string(k);
            doc.topic = pool.label;

            const std::size_t sentence_count = 5 + bounded(rng, 6);  // 5..10
            std::string text;
            for (std::size_t s = 0; s < sentence_count; ++s) {
                if (!text.empty()) text += ' ';
                text += fill_frame(kFrames[bounded(rng, kFrames.size())], pool, rng);
            }
            doc.text = std::move(text);

            const std::size_t summary_count = 1 + bounded(rng, 2);  // 1..2
            std::string summary;
            for (std::size_t s = 0; s < summary_count; ++s) {
                if (!summary.empty()) summary += ' ';
                summary +=
                    fill_frame(kSummaryFrames[bounded(rng, kSummaryFrames.size())], pool, rng);
            }
            doc.summary = std::move(summary);
            docs.push_back(std::move(doc));
        }
    }
    return Corpus(std::move(docs));
}

}  // namespace topicsum
