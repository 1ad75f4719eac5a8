#include "topicsum/stas.hpp"

#include "topicsum/error.hpp"

namespace topicsum {

double normalize_stas(const std::map<std::string, double>& similarities,
                      const std::string& requested_topic) {
    auto requested = similarities.find(requested_topic);
    if (requested == similarities.end()) {
        throw Error("unknown topic " + requested_topic);
    }
    double max_sim = 0.0;
    for (const auto& [topic, sim] : similarities) max_sim = std::max(max_sim, sim);
    if (max_sim <= 0.0) {
        // Unreachable through stas_score (the zero-vector precondition is
        // checked first); refuse rather than fabricate a score.
        throw Error("all topic similarities are zero");
    }
    return requested->second / max_sim;
}

StasReport stas_score(const TopicModel& topic_model, const TfIdfModel& tfidf,
                      std::string_view summary, const std::string& requested_topic,
                      double relevance_threshold) {
    return stas_score(topic_model, tfidf, summary, requested_topic, "",
                      relevance_threshold);
}

StasReport stas_score(const TopicModel& topic_model, const TfIdfModel& tfidf,
                      std::string_view summary, const std::string& requested_topic,
                      const std::string& summary_id, double relevance_threshold) {
    if (!topic_model.has_topic(requested_topic)) {
        std::string known;
        for (const std::string& t : topic_model.topics()) {
            if (!known.empty()) known += ", ";
            known += t;
        }
        throw Error("unknown topic " + requested_topic + "; known topics: " + known);
    }
    StasReport report;
    report.summary_id = summary_id;
    report.requested_topic = requested_topic;
    report.similarities = topic_model.similarities(tfidf, summary);
    report.stas = normalize_stas(report.similarities, requested_topic);
    double best = -1.0;
    for (const auto& [topic, sim] : report.similarities) {
        if (sim > best) {
            best = sim;
            report.dominant_topic = topic;
        }
    }
    report.relevant = report.stas >= relevance_threshold;
    return report;
}

BatchReport score_batch(const TopicModel& topic_model, const TfIdfModel& tfidf,
                        const std::vector<ScorePair>& pairs,
                        double relevance_threshold) {
    BatchReport batch;
    batch.records.reserve(pairs.size());
    double sum = 0.0;
    for (const ScorePair& pair : pairs) {
        BatchRecord record;
        record.id = pair.id;
        try {
            record.report = stas_score(topic_model, tfidf, pair.summary, pair.topic,
                                       pair.id, relevance_threshold);
            sum += record.report->stas;
            ++batch.scored_count;
        } catch (const Error& e) {
            record.error = e.what();
        }
        batch.records.push_back(std::move(record));
    }
    if (batch.scored_count > 0) {
        batch.mean_stas = sum / static_cast<double>(batch.scored_count);
    }
    return batch;
}

}  // namespace topicsum
