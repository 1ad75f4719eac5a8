#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace topicsum {

// One corpus record. `extra` carries any JSONL fields beyond the four known
// ones so that load -> save round-trips losslessly.
struct Document {
    std::string id;
    std::string text;
    std::optional<std::string> topic;
    std::optional<std::string> summary;
    nlohmann::json extra = nlohmann::json::object();

    bool operator==(const Document&) const = default;
};

// Immutable ordered document collection. Construction validates the
// invariants: ids nonempty and unique, text nonempty after trimming.
class Corpus {
public:
    Corpus() = default;
    explicit Corpus(std::vector<Document> documents);

    const std::vector<Document>& documents() const { return docs_; }
    // Exact set of non-null topic labels present.
    const std::set<std::string>& topics() const { return topics_; }

    std::size_t size() const { return docs_.size(); }
    bool empty() const { return docs_.empty(); }
    auto begin() const { return docs_.begin(); }
    auto end() const { return docs_.end(); }
    const Document& operator[](std::size_t i) const { return docs_[i]; }

    bool operator==(const Corpus& other) const { return docs_ == other.docs_; }

private:
    std::vector<Document> docs_;
    std::set<std::string> topics_;
};

// JSONL schema per line: {"id": str, "text": str, "topic": str?, "summary": str?}.
// Topic labels are trimmed of surrounding whitespace; unknown fields are
// preserved. With require_topics, a document without a topic is an error.
Corpus load_corpus(const std::filesystem::path& path, bool require_topics = false);
Corpus read_corpus(std::istream& in, bool require_topics = false);

void save_corpus(const Corpus& corpus, const std::filesystem::path& path);
void write_corpus(const Corpus& corpus, std::ostream& out);

nlohmann::json document_to_json(const Document& doc);
Document document_from_json(const nlohmann::json& obj);

// Keeps only documents whose topic is carried by at least min_docs documents.
// Documents without a topic are untouched, so min_docs=1 is a no-op. Order is
// preserved; idempotent.
Corpus filter_min_topic_frequency(const Corpus& corpus, std::size_t min_docs);

}  // namespace topicsum
