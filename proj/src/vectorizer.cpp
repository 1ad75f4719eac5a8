#include "topicsum/vectorizer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include "topicsum/error.hpp"

namespace topicsum {
namespace {

double euclidean_norm(const std::vector<SparseVector::Entry>& entries) {
    double acc = 0.0;
    for (const auto& [index, weight] : entries) acc += weight * weight;
    return std::sqrt(acc);
}

std::map<std::string, std::size_t> lemma_counts(std::string_view text,
                                                const Lemmatizer& lemmatizer) {
    std::map<std::string, std::size_t> counts;
    for (const Token& tok : tokenize(text, lemmatizer)) ++counts[tok.lemma];
    return counts;
}

}  // namespace

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector v;
    for (const Entry& e : entries) {
        if (e.second < 0.0) throw Error("sparse vector weights must be non-negative");
        if (e.second == 0.0) continue;
        if (!v.entries_.empty() && v.entries_.back().first == e.first) {
            v.entries_.back().second += e.second;
        } else {
            v.entries_.push_back(e);
        }
    }
    v.norm_ = euclidean_norm(v.entries_);
    return v;
}

double SparseVector::dot(const SparseVector& other) const {
    double acc = 0.0;
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            acc += a->second * b->second;
            ++a;
            ++b;
        }
    }
    return acc;
}

SparseVector SparseVector::scaled(double factor) const {
    if (factor < 0.0) throw Error("scale factor must be non-negative");
    std::vector<Entry> scaled_entries = entries_;
    for (Entry& e : scaled_entries) e.second *= factor;
    return from_entries(std::move(scaled_entries));
}

SparseVector SparseVector::mean(const std::vector<SparseVector>& vectors) {
    if (vectors.empty()) return SparseVector();
    std::map<std::uint32_t, double> acc;
    for (const SparseVector& v : vectors) {
        for (const Entry& e : v.entries()) acc[e.first] += e.second;
    }
    std::vector<Entry> entries;
    entries.reserve(acc.size());
    const double inv = 1.0 / static_cast<double>(vectors.size());
    for (const auto& [index, weight] : acc) entries.emplace_back(index, weight * inv);
    return from_entries(std::move(entries));
}

double cosine(const SparseVector& a, const SparseVector& b) {
    if (a.norm() == 0.0 || b.norm() == 0.0) return 0.0;
    return a.dot(b) / (a.norm() * b.norm());
}

Vocabulary::Vocabulary(std::vector<std::string> sorted_terms)
    : terms_(std::move(sorted_terms)) {
    for (std::uint32_t i = 0; i < terms_.size(); ++i) {
        if (i > 0 && !(terms_[i - 1] < terms_[i])) {
            throw Error("vocabulary terms must be strictly sorted");
        }
        index_.emplace(terms_[i], i);
    }
}

std::int64_t Vocabulary::find(const std::string& lemma) const {
    auto it = index_.find(lemma);
    return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

TfIdfModel TfIdfModel::fit(const Corpus& corpus) { return fit(corpus, Lemmatizer()); }

TfIdfModel TfIdfModel::fit(const Corpus& corpus, const Lemmatizer& lemmatizer) {
    if (corpus.empty()) throw Error("cannot fit tf-idf model on an empty corpus");
    // Document frequency per lemma; std::map keeps the vocabulary sorted.
    std::map<std::string, std::size_t> df;
    for (const Document& doc : corpus) {
        std::map<std::string, std::size_t> counts = lemma_counts(doc.text, lemmatizer);
        for (const auto& [lemma, count] : counts) ++df[lemma];
    }
    TfIdfModel model;
    model.doc_count_ = corpus.size();
    model.lemmatizer_ = lemmatizer;
    std::vector<std::string> terms;
    terms.reserve(df.size());
    model.idf_.reserve(df.size());
    const double n = static_cast<double>(corpus.size());
    for (const auto& [lemma, doc_freq] : df) {
        terms.push_back(lemma);
        model.idf_.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(doc_freq))) +
                             1.0);
    }
    model.vocabulary_ = Vocabulary(std::move(terms));
    return model;
}

SparseVector TfIdfModel::transform_counts(std::string_view text) const {
    std::vector<SparseVector::Entry> entries;
    for (const auto& [lemma, count] : lemma_counts(text, lemmatizer_)) {
        std::int64_t idx = vocabulary_.find(lemma);
        if (idx < 0) continue;
        entries.emplace_back(static_cast<std::uint32_t>(idx), static_cast<double>(count));
    }
    return SparseVector::from_entries(std::move(entries));
}

SparseVector TfIdfModel::transform_unnormalized(std::string_view text) const {
    std::vector<SparseVector::Entry> entries;
    for (const auto& [lemma, count] : lemma_counts(text, lemmatizer_)) {
        std::int64_t idx = vocabulary_.find(lemma);
        if (idx < 0) continue;
        entries.emplace_back(static_cast<std::uint32_t>(idx),
                             static_cast<double>(count) * idf_[static_cast<std::size_t>(idx)]);
    }
    return SparseVector::from_entries(std::move(entries));
}

SparseVector TfIdfModel::transform(std::string_view text) const {
    SparseVector raw = transform_unnormalized(text);
    if (raw.is_zero()) return raw;
    return raw.scaled(1.0 / raw.norm());
}

nlohmann::json TfIdfModel::to_json() const {
    return nlohmann::json{{"doc_count", doc_count_},
                          {"terms", vocabulary_.terms()},
                          {"idf", idf_}};
}

TfIdfModel TfIdfModel::from_json(const nlohmann::json& obj) {
    return from_json(obj, Lemmatizer());
}

TfIdfModel TfIdfModel::from_json(const nlohmann::json& obj, const Lemmatizer& lemmatizer) {
    TfIdfModel model;
    model.doc_count_ = obj.at("doc_count").get<std::size_t>();
    model.vocabulary_ = Vocabulary(obj.at("terms").get<std::vector<std::string>>());
    model.idf_ = obj.at("idf").get<std::vector<double>>();
    model.lemmatizer_ = lemmatizer;
    if (model.idf_.size() != model.vocabulary_.size()) {
        throw Error("tf-idf model file is inconsistent: idf length != vocabulary size");
    }
    return model;
}

void TfIdfModel::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot write model file " + path.string());
    out << to_json().dump() << "\n";
}

TfIdfModel TfIdfModel::load(const std::filesystem::path& path) {
    return load(path, Lemmatizer());
}

TfIdfModel TfIdfModel::load(const std::filesystem::path& path, const Lemmatizer& lemmatizer) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open model file " + path.string());
    nlohmann::json obj;
    try {
        in >> obj;
    } catch (const nlohmann::json::exception& e) {
        throw Error("malformed model file " + path.string() + ": " + e.what());
    }
    return from_json(obj, lemmatizer);
}

}  // namespace topicsum
