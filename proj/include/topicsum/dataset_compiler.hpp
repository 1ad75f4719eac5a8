#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "topicsum/corpus.hpp"
#include "topicsum/defaults.hpp"
#include "topicsum/topic_model.hpp"
#include "topicsum/vectorizer.hpp"

namespace topicsum {

// Synthetic two-topic article: sentences of both sources interleaved, paired
// with exactly one source's summary and that summary's topic.
struct SuperArticle {
    std::string id;
    std::string text;
    std::string summary;
    std::string topic;
    std::array<std::string, 2> source_ids;  // {summary source, partner}

    bool operator==(const SuperArticle&) const = default;
};

struct CompileStats {
    std::size_t input_count = 0;
    std::size_t assigned_count = 0;
    std::size_t discarded_multi_dominant = 0;
    std::size_t discarded_low_frequency = 0;
    std::size_t discarded_excluded = 0;  // removed via the exclude-topics filter
    std::size_t pairs_formed = 0;
    std::size_t leftover_same_topic = 0;

    nlohmann::json to_json() const;
};

struct CompileOptions {
    double dominance_ratio = defaults::kDominanceRatio;
    std::size_t min_topic_docs = defaults::kMinTopicDocs;
    std::uint64_t seed = 0;
    bool identical_pair_text = false;  // a'' reuses a' text instead of re-interleaving
    std::vector<std::string> exclude_topics;
};

// Round-robin sentence interleave starting with `first`; when one side runs
// out, the rest of the other follows. Sentences are joined by single spaces.
std::string interleave_sentences(const std::vector<std::string>& first,
                                 const std::vector<std::string>& second);

// The two super-articles of one draw: a' starts with a1's sentences and
// carries a1's summary/topic, a'' starts with a2's.
std::pair<SuperArticle, SuperArticle> make_pair_articles(const Document& a1,
                                                         const Document& a2,
                                                         bool identical_pair_text = false);

// Assigns each document the topic of its summary (per assign_topic on the
// summary text) and drops multi-dominant documents. Every document must have
// a summary.
std::pair<Corpus, CompileStats> build_intermediate(const Corpus& corpus,
                                                   const TopicModel& topic_model,
                                                   const TfIdfModel& tfidf,
                                                   double dominance_ratio);

// Repeatedly draws two different-topic articles from the intermediate pool,
// emits their a'/a'' pair and removes both, until the pool is empty or
// single-topic. Fully deterministic for a given seed.
std::pair<std::vector<SuperArticle>, CompileStats> compile_pairs(
    const Corpus& intermediate, std::uint64_t seed, bool identical_pair_text = false);

// Full pipeline: assign -> drop excluded topics -> low-frequency filter ->
// pair formation, with merged stats.
std::pair<std::vector<SuperArticle>, CompileStats> compile_dataset(
    const Corpus& corpus, const TopicModel& topic_model, const TfIdfModel& tfidf,
    const CompileOptions& options = {});

struct SplitRatios {
    double train = 0.8;
    double val = 0.1;
    double test = 0.1;
};

// Seeded shuffle of the a'/a'' pairs (kept atomic, so a pair never straddles
// splits) followed by contiguous slicing. Requires at least 3 pairs and
// ratios that are positive and sum to 1 within 1e-9.
std::array<std::vector<SuperArticle>, 3> split_dataset(
    const std::vector<SuperArticle>& super_articles, SplitRatios ratios,
    std::uint64_t seed);

nlohmann::json super_article_to_json(const SuperArticle& article);
SuperArticle super_article_from_json(const nlohmann::json& obj);

}  // namespace topicsum
