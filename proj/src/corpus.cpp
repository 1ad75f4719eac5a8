#include "topicsum/corpus.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "topicsum/error.hpp"
#include "topicsum/textproc.hpp"

namespace topicsum {
namespace {

void validate_document(const Document& doc, const std::string& where) {
    if (doc.id.empty()) throw Error("empty id" + where);
    if (trim(doc.text).empty()) throw Error("empty text for document " + doc.id + where);
}

std::optional<std::string> read_optional_label(const nlohmann::json& obj, const char* key) {
    if (!obj.contains(key) || obj[key].is_null()) return std::nullopt;
    std::string value(trim(obj[key].get<std::string>()));
    if (value.empty()) return std::nullopt;
    return value;
}

}  // namespace

Corpus::Corpus(std::vector<Document> documents) : docs_(std::move(documents)) {
    std::unordered_set<std::string> ids;
    for (const Document& doc : docs_) {
        validate_document(doc, "");
        if (!ids.insert(doc.id).second) throw Error("duplicate id " + doc.id);
        if (doc.topic) topics_.insert(*doc.topic);
    }
}

Document document_from_json(const nlohmann::json& obj) {
    Document doc;
    doc.id = obj.at("id").get<std::string>();
    doc.text = obj.at("text").get<std::string>();
    doc.topic = read_optional_label(obj, "topic");
    if (obj.contains("summary") && !obj["summary"].is_null()) {
        doc.summary = obj["summary"].get<std::string>();
    }
    doc.extra = nlohmann::json::object();
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (it.key() == "id" || it.key() == "text" || it.key() == "topic" ||
            it.key() == "summary") {
            continue;
        }
        doc.extra[it.key()] = it.value();
    }
    return doc;
}

nlohmann::json document_to_json(const Document& doc) {
    nlohmann::json obj = doc.extra.is_object() ? doc.extra : nlohmann::json::object();
    obj["id"] = doc.id;
    obj["text"] = doc.text;
    if (doc.topic) obj["topic"] = *doc.topic;
    if (doc.summary) obj["summary"] = *doc.summary;
    return obj;
}

Corpus read_corpus(std::istream& in, bool require_topics) {
    std::vector<Document> docs;
    std::unordered_set<std::string> ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const std::string where = " at line " + std::to_string(lineno);
        nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
        if (obj.is_discarded() || !obj.is_object()) {
            throw Error("malformed line" + where);
        }
        if (!obj.contains("id") || !obj["id"].is_string() || !obj.contains("text") ||
            !obj["text"].is_string()) {
            throw Error("malformed line" + where + ": id and text are required strings");
        }
        Document doc = document_from_json(obj);
        validate_document(doc, where);
        if (!ids.insert(doc.id).second) {
            throw Error("duplicate id " + doc.id + where);
        }
        if (require_topics && !doc.topic) {
            throw Error("document " + doc.id + " has no topic" + where);
        }
        docs.push_back(std::move(doc));
    }
    return Corpus(std::move(docs));
}

Corpus load_corpus(const std::filesystem::path& path, bool require_topics) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus file " + path.string());
    try {
        return read_corpus(in, require_topics);
    } catch (const Error& e) {
        throw Error(path.string() + ": " + e.what());
    }
}

void write_corpus(const Corpus& corpus, std::ostream& out) {
    for (const Document& doc : corpus) {
        out << document_to_json(doc).dump() << "\n";
    }
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write corpus file " + path.string());
    write_corpus(corpus, out);
}

Corpus filter_min_topic_frequency(const Corpus& corpus, std::size_t min_docs) {
    if (min_docs < 1) throw Error("min_docs must be >= 1");
    std::map<std::string, std::size_t> counts;
    for (const Document& doc : corpus) {
        if (doc.topic) ++counts[*doc.topic];
    }
    std::vector<Document> kept;
    for (const Document& doc : corpus) {
        if (!doc.topic || counts[*doc.topic] >= min_docs) kept.push_back(doc);
    }
    return Corpus(std::move(kept));
}

}  // namespace topicsum
