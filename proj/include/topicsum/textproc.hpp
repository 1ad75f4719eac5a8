#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace topicsum {

// A token is a maximal run of >= 2 ASCII alphanumerics. Offsets are byte
// positions into the original text, so text[start:end] == surface.
struct Token {
    std::string surface;
    std::string lemma;
    std::size_t start = 0;
    std::size_t end = 0;
};

// Rule-based English lemmatizer: lowercases, then strips plural -s/-es/-ies,
// -ing and -ed suffixes to a fixpoint, consulting an exception table first.
// The exception table is closed under lemmatization at construction time,
// which is what makes lemmatize(lemmatize(w)) == lemmatize(w) hold even for
// user-supplied entries.
class Lemmatizer {
public:
    // Built-in exception table (common irregular plurals plus a few words
    // the suffix rules would mangle).
    Lemmatizer();

    // Entries override the built-in table on conflict.
    static Lemmatizer with_exceptions(
        const std::unordered_map<std::string, std::string>& entries);

    // Loads a JSONL file of {"surface": str, "lemma": str} lines.
    static Lemmatizer from_jsonl(const std::filesystem::path& path);

    std::string lemmatize(std::string_view surface) const;

private:
    std::unordered_map<std::string, std::string> exceptions_;
    void close_table();
};

// Lemmatization with the built-in table.
std::string lemmatize(std::string_view surface);

std::vector<Token> tokenize(std::string_view text);
std::vector<Token> tokenize(std::string_view text, const Lemmatizer& lemmatizer);

// Splits at . ! ? followed by whitespace and an uppercase letter (or end of
// text), with an abbreviation guard so "Dr. Smith" stays together. Sentences
// are trimmed; no alphanumeric content is lost.
std::vector<std::string> split_sentences(std::string_view text);

// ASCII-only helpers shared across modules.
std::string ascii_lower(std::string_view s);
std::string_view trim(std::string_view s);

}  // namespace topicsum
