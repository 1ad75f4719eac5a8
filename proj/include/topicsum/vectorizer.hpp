#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "topicsum/corpus.hpp"
#include "topicsum/textproc.hpp"

namespace topicsum {

// Sparse non-negative vector over vocabulary indices. Entries are sorted by
// index, zero weights are never stored, and the Euclidean norm is cached.
class SparseVector {
public:
    using Entry = std::pair<std::uint32_t, double>;

    SparseVector() = default;
    // Sorts, merges duplicate indices and drops zeros.
    static SparseVector from_entries(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    double norm() const { return norm_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }

    double dot(const SparseVector& other) const;
    SparseVector scaled(double factor) const;
    static SparseVector mean(const std::vector<SparseVector>& vectors);

    bool operator==(const SparseVector& other) const { return entries_ == other.entries_; }

private:
    std::vector<Entry> entries_;
    double norm_ = 0.0;
};

// cos(a, b) = a.b / (|a||b|); 0 when either vector is zero. Non-negative
// weights keep the result in [0, 1].
double cosine(const SparseVector& a, const SparseVector& b);

// Lexicographically sorted lemma vocabulary with O(1) lookup.
class Vocabulary {
public:
    Vocabulary() = default;
    explicit Vocabulary(std::vector<std::string> sorted_terms);

    const std::vector<std::string>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    // Returns the term index or -1.
    std::int64_t find(const std::string& lemma) const;
    const std::string& term(std::uint32_t index) const { return terms_[index]; }

private:
    std::vector<std::string> terms_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

// tf-idf model fitted over a whole labeled collection.
// idf(term) = ln((1 + doc_count) / (1 + df(term))) + 1, so every weight >= 1.
class TfIdfModel {
public:
    TfIdfModel() = default;

    static TfIdfModel fit(const Corpus& corpus);
    static TfIdfModel fit(const Corpus& corpus, const Lemmatizer& lemmatizer);

    // Raw lemma count x idf, L2-normalized. Unknown lemmas are dropped; a
    // text with no in-vocabulary lemma yields the zero vector.
    SparseVector transform(std::string_view text) const;
    // Same weights without the final L2 normalization.
    SparseVector transform_unnormalized(std::string_view text) const;
    // Plain bag-of-words lemma counts over the vocabulary (no idf, no norm).
    SparseVector transform_counts(std::string_view text) const;

    const Vocabulary& vocabulary() const { return vocabulary_; }
    const std::vector<double>& idf() const { return idf_; }
    std::size_t doc_count() const { return doc_count_; }
    const Lemmatizer& lemmatizer() const { return lemmatizer_; }

    nlohmann::json to_json() const;
    static TfIdfModel from_json(const nlohmann::json& obj);
    static TfIdfModel from_json(const nlohmann::json& obj, const Lemmatizer& lemmatizer);
    void save(const std::filesystem::path& path) const;
    static TfIdfModel load(const std::filesystem::path& path);
    static TfIdfModel load(const std::filesystem::path& path, const Lemmatizer& lemmatizer);

private:
    Vocabulary vocabulary_;
    std::vector<double> idf_;
    std::size_t doc_count_ = 0;
    Lemmatizer lemmatizer_;
};

}  // namespace topicsum
