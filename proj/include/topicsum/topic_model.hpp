#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "topicsum/corpus.hpp"
#include "topicsum/defaults.hpp"
#include "topicsum/vectorizer.hpp"

namespace topicsum {

// How topic prototypes are formed and compared.
//   normalize_before_average: average L2-normalized tf-idf vectors (keeps
//     long documents from dominating the prototype).
//   raw_bow: plain lemma-count vectors compared by dot-product instead of
//     tf-idf cosine, for fidelity experiments with the count-based variant.
struct PrototypeOptions {
    bool normalize_before_average = true;
    bool raw_bow = false;
};

// Ranked representative terms of one topic: (lemma, score) by descending
// score, ties broken lexicographically.
struct TermSet {
    std::string topic;
    std::vector<std::pair<std::string, double>> terms;
    std::size_t n = 0;
};

struct TopicAssignment {
    std::string best_topic;
    std::map<std::string, double> similarities;
    bool multi_dominant = false;
};

// Argmax with lexicographic tie-break plus the relative dominance rule: the
// text is multi-dominant when some other topic reaches
// dominance_ratio * best similarity. Exposed for direct testing.
TopicAssignment resolve_dominance(const std::map<std::string, double>& similarities,
                                  double dominance_ratio);

// Per-topic prototype vectors: the mean of the (normalized) document vectors
// of every document labeled with the topic.
class TopicModel {
public:
    TopicModel() = default;

    // Every document must carry a topic; every prototype must come out with
    // a positive norm.
    static TopicModel build(const TfIdfModel& model, const Corpus& corpus,
                            const PrototypeOptions& options = {});

    const std::vector<std::string>& topics() const { return topics_; }
    bool has_topic(const std::string& topic) const;
    const SparseVector& prototype(const std::string& topic) const;
    std::size_t source_count(const std::string& topic) const;
    const PrototypeOptions& options() const { return options_; }

    // The n highest-weight lemmas of the topic prototype. The tf-idf model
    // supplies the index -> lemma mapping.
    TermSet top_terms(const TfIdfModel& model, const std::string& topic,
                      std::size_t n) const;

    // Similarity between the text and every prototype (cosine, or raw
    // dot-product when the model was built with raw_bow). Errors on a text
    // with no in-vocabulary content.
    std::map<std::string, double> similarities(const TfIdfModel& model,
                                               std::string_view text) const;

    TopicAssignment assign_topic(const TfIdfModel& model, std::string_view text,
                                 double dominance_ratio = defaults::kDominanceRatio) const;

    nlohmann::json to_json() const;
    static TopicModel from_json(const nlohmann::json& obj);
    void save(const std::filesystem::path& path) const;
    static TopicModel load(const std::filesystem::path& path);

private:
    std::vector<std::string> topics_;  // sorted
    std::map<std::string, SparseVector> prototypes_;
    std::map<std::string, std::size_t> source_counts_;
    PrototypeOptions options_;
};

}  // namespace topicsum
