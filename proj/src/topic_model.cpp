#include "topicsum/topic_model.hpp"

#include <algorithm>
#include <fstream>

#include "topicsum/error.hpp"

namespace topicsum {
namespace {

std::string known_topics_list(const std::vector<std::string>& topics) {
    std::string out;
    for (const std::string& t : topics) {
        if (!out.empty()) out += ", ";
        out += t;
    }
    return out;
}

}  // namespace

TopicAssignment resolve_dominance(const std::map<std::string, double>& similarities,
                                  double dominance_ratio) {
    if (similarities.empty()) throw Error("no topics to assign");
    if (dominance_ratio <= 0.0 || dominance_ratio > 1.0) {
        throw Error("dominance_ratio must be in (0, 1]");
    }
    TopicAssignment result;
    result.similarities = similarities;
    // std::map iterates in lexicographic order, so keeping strict maxima
    // makes ties resolve to the lexicographically smallest topic.
    double best = -1.0;
    for (const auto& [topic, sim] : similarities) {
        if (sim > best) {
            best = sim;
            result.best_topic = topic;
        }
    }
    for (const auto& [topic, sim] : similarities) {
        if (topic != result.best_topic && sim >= dominance_ratio * best && sim > 0.0) {
            result.multi_dominant = true;
            break;
        }
    }
    return result;
}

TopicModel TopicModel::build(const TfIdfModel& model, const Corpus& corpus,
                             const PrototypeOptions& options) {
    TopicModel tm;
    tm.options_ = options;
    std::map<std::string, std::vector<SparseVector>> grouped;
    for (const Document& doc : corpus) {
        if (!doc.topic) throw Error("document " + doc.id + " has no topic");
        SparseVector vec;
        if (options.raw_bow) {
            vec = model.transform_counts(doc.text);
        } else if (options.normalize_before_average) {
            vec = model.transform(doc.text);
        } else {
            vec = model.transform_unnormalized(doc.text);
        }
        grouped[*doc.topic].push_back(std::move(vec));
    }
    if (grouped.empty()) throw Error("cannot build topic prototypes from an empty corpus");
    for (const auto& [topic, vectors] : grouped) {
        SparseVector proto = SparseVector::mean(vectors);
        if (proto.is_zero()) {
            throw Error("topic " + topic + " has no in-vocabulary content");
        }
        tm.topics_.push_back(topic);
        tm.prototypes_.emplace(topic, std::move(proto));
        tm.source_counts_.emplace(topic, vectors.size());
    }
    return tm;
}

bool TopicModel::has_topic(const std::string& topic) const {
    return prototypes_.count(topic) > 0;
}

const SparseVector& TopicModel::prototype(const std::string& topic) const {
    auto it = prototypes_.find(topic);
    if (it == prototypes_.end()) {
        throw Error("unknown topic " + topic + "; known topics: " +
                    known_topics_list(topics_));
    }
    return it->second;
}

std::size_t TopicModel::source_count(const std::string& topic) const {
    auto it = source_counts_.find(topic);
    if (it == source_counts_.end()) {
        throw Error("unknown topic " + topic + "; known topics: " +
                    known_topics_list(topics_));
    }
    return it->second;
}

TermSet TopicModel::top_terms(const TfIdfModel& model, const std::string& topic,
                              std::size_t n) const {
    if (n < 1) throw Error("n must be >= 1");
    const SparseVector& proto = prototype(topic);
    std::vector<std::pair<std::string, double>> ranked;
    ranked.reserve(proto.nnz());
    for (const auto& [index, weight] : proto.entries()) {
        ranked.emplace_back(model.vocabulary().term(index), weight);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (ranked.size() > n) ranked.resize(n);
    return TermSet{topic, std::move(ranked), n};
}

std::map<std::string, double> TopicModel::similarities(const TfIdfModel& model,
                                                       std::string_view text) const {
    SparseVector vec =
        options_.raw_bow ? model.transform_counts(text) : model.transform(text);
    if (vec.is_zero()) throw Error("no in-vocabulary content");
    std::map<std::string, double> sims;
    for (const auto& [topic, proto] : prototypes_) {
        sims[topic] = options_.raw_bow ? vec.dot(proto) : cosine(vec, proto);
    }
    return sims;
}

TopicAssignment TopicModel::assign_topic(const TfIdfModel& model, std::string_view text,
                                         double dominance_ratio) const {
    return resolve_dominance(similarities(model, text), dominance_ratio);
}

nlohmann::json TopicModel::to_json() const {
    nlohmann::json prototypes = nlohmann::json::object();
    for (const auto& [topic, proto] : prototypes_) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& [index, weight] : proto.entries()) {
            entries.push_back({index, weight});
        }
        prototypes[topic] = std::move(entries);
    }
    std::string mode = options_.raw_bow
                           ? "bow"
                           : (options_.normalize_before_average ? "tfidf" : "tfidf_raw");
    return nlohmann::json{{"topics", topics_},
                          {"prototypes", std::move(prototypes)},
                          {"source_counts", source_counts_},
                          {"mode", mode}};
}

TopicModel TopicModel::from_json(const nlohmann::json& obj) {
    TopicModel tm;
    tm.topics_ = obj.at("topics").get<std::vector<std::string>>();
    for (const auto& [topic, entries] : obj.at("prototypes").items()) {
        std::vector<SparseVector::Entry> parsed;
        for (const auto& e : entries) {
            parsed.emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<double>());
        }
        tm.prototypes_.emplace(topic, SparseVector::from_entries(std::move(parsed)));
    }
    tm.source_counts_ =
        obj.at("source_counts").get<std::map<std::string, std::size_t>>();
    std::string mode = obj.value("mode", "tfidf");
    tm.options_.raw_bow = (mode == "bow");
    tm.options_.normalize_before_average = (mode != "tfidf_raw");
    for (const std::string& topic : tm.topics_) {
        if (!tm.prototypes_.count(topic)) {
            throw Error("topic model file is missing a prototype for topic " + topic);
        }
    }
    if (tm.topics_.size() != tm.prototypes_.size()) {
        throw Error("topic model file lists fewer topics than prototypes");
    }
    return tm;
}

void TopicModel::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot write topic model file " + path.string());
    out << to_json().dump() << "\n";
}

TopicModel TopicModel::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open topic model file " + path.string());
    nlohmann::json obj;
    try {
        in >> obj;
    } catch (const nlohmann::json::exception& e) {
        throw Error("malformed topic model file " + path.string() + ": " + e.what());
    }
    return from_json(obj);
}

}  // namespace topicsum
