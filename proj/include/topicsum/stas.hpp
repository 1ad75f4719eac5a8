#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topicsum/defaults.hpp"
#include "topicsum/topic_model.hpp"
#include "topicsum/vectorizer.hpp"

namespace topicsum {

// Summarization Topic Affinity Score for one summary/topic pair: the cosine
// similarity to the requested topic divided by the maximum similarity over
// all topics. The dominant topic therefore always scores exactly 1.
struct StasReport {
    std::string summary_id;
    std::string requested_topic;
    std::map<std::string, double> similarities;
    double stas = 0.0;
    std::string dominant_topic;
    bool relevant = false;  // stas >= threshold, inclusive
};

// Normalization step alone, for callers that already have the similarity
// map. Errors on an unknown topic or an all-zero map.
double normalize_stas(const std::map<std::string, double>& similarities,
                      const std::string& requested_topic);

StasReport stas_score(const TopicModel& topic_model, const TfIdfModel& tfidf,
                      std::string_view summary, const std::string& requested_topic,
                      double relevance_threshold = defaults::kRelevanceThreshold);
StasReport stas_score(const TopicModel& topic_model, const TfIdfModel& tfidf,
                      std::string_view summary, const std::string& requested_topic,
                      const std::string& summary_id, double relevance_threshold);

struct ScorePair {
    std::string id;
    std::string summary;
    std::string topic;
};

// One batch record: either a report or the error that pair produced.
struct BatchRecord {
    std::string id;
    std::optional<StasReport> report;
    std::string error;  // empty on success

    bool ok() const { return report.has_value(); }
};

struct BatchReport {
    std::vector<BatchRecord> records;     // input order
    std::size_t scored_count = 0;         // successful records
    std::optional<double> mean_stas;      // over successful records; absent when none
};

// Scores every pair; per-pair failures become error records instead of
// aborting the batch.
BatchReport score_batch(const TopicModel& topic_model, const TfIdfModel& tfidf,
                        const std::vector<ScorePair>& pairs,
                        double relevance_threshold = defaults::kRelevanceThreshold);

}  // namespace topicsum
