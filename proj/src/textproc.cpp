#include "topicsum/textproc.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "topicsum/error.hpp"

namespace topicsum {
namespace {

bool is_alnum(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }

bool is_ws(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool has_vowel(std::string_view s) {
    return std::any_of(s.begin(), s.end(), is_vowel);
}

// Collapses a doubled final consonant left behind by -ing/-ed stripping
// ("running" -> "runn" -> "run"). ll/ss/ff/zz stay ("fall", "pass", "buzz").
void undouble(std::string& w) {
    if (w.size() < 3) return;
    char b = w.back();
    char a = w[w.size() - 2];
    if (a == b && !is_vowel(b) && b != 'l' && b != 's' && b != 'f' && b != 'z') {
        w.pop_back();
    }
}

// Applies the highest-priority matching suffix rule. Returns false when the
// word is already a fixpoint. Every rule strictly shortens the word, so the
// caller's loop terminates.
bool apply_suffix_rule(std::string& w) {
    const std::size_t n = w.size();
    if (n >= 5 && ends_with(w, "ies")) {
        w.replace(n - 3, 3, "y");
        return true;
    }
    if (n >= 5 && ends_with(w, "ied")) {
        w.replace(n - 3, 3, "y");
        return true;
    }
    if (n >= 5 && (ends_with(w, "sses") || ends_with(w, "xes") || ends_with(w, "zes") ||
                   ends_with(w, "ches") || ends_with(w, "shes"))) {
        w.erase(n - 2);
        return true;
    }
    if (n >= 4 && w.back() == 's' && !ends_with(w, "ss") && !ends_with(w, "us") &&
        !ends_with(w, "is")) {
        w.pop_back();
        return true;
    }
    if (n >= 6 && ends_with(w, "ing") && has_vowel(std::string_view(w).substr(0, n - 3))) {
        w.erase(n - 3);
        undouble(w);
        return true;
    }
    if (n >= 5 && ends_with(w, "ed") && has_vowel(std::string_view(w).substr(0, n - 2))) {
        w.erase(n - 2);
        undouble(w);
        return true;
    }
    return false;
}

const std::unordered_map<std::string, std::string>& builtin_exceptions() {
    static const std::unordered_map<std::string, std::string> table = {
        {"men", "man"},           {"women", "woman"},     {"children", "child"},
        {"feet", "foot"},         {"teeth", "tooth"},     {"mice", "mouse"},
        {"geese", "goose"},       {"lives", "life"},      {"wives", "wife"},
        {"knives", "knife"},      {"leaves", "leaf"},     {"halves", "half"},
        {"selves", "self"},       {"shelves", "shelf"},   {"wolves", "wolf"},
        {"movies", "movie"},      {"series", "series"},   {"species", "species"},
        {"news", "news"},         {"mars", "mars"},       {"does", "do"},
        {"goes", "go"},           {"during", "during"},   {"nothing", "nothing"},
        {"something", "something"}, {"anything", "anything"}, {"everything", "everything"},
        {"indeed", "indeed"},     {"united", "united"},
    };
    return table;
}

const std::unordered_set<std::string>& abbreviation_guard() {
    // Lowercased, trailing period included. Single initials ("A.") are
    // intentionally absent: "A. B." splits into two sentences.
    static const std::unordered_set<std::string> guard = {
        "dr.",   "mr.",   "mrs.",  "ms.",   "prof.", "st.",  "mt.",   "sr.",
        "jr.",   "rev.",  "gen.",  "sen.",  "rep.",  "gov.", "capt.", "col.",
        "lt.",   "sgt.",  "vs.",   "etc.",  "e.g.",  "i.e.", "inc.",  "ltd.",
        "co.",   "corp.", "fig.",  "no.",   "vol.",  "dept.", "univ.", "approx.",
        "jan.",  "feb.",  "mar.",  "apr.",  "jun.",  "jul.", "aug.",  "sep.",
        "sept.", "oct.",  "nov.",  "dec.",  "u.s.",  "u.k.", "a.m.",  "p.m.",
    };
    return guard;
}

}  // namespace

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::string_view trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_ws(s[b])) ++b;
    while (e > b && is_ws(s[e - 1])) --e;
    return s.substr(b, e - b);
}

Lemmatizer::Lemmatizer() : exceptions_(builtin_exceptions()) {}

Lemmatizer Lemmatizer::with_exceptions(
    const std::unordered_map<std::string, std::string>& entries) {
    Lemmatizer lem;
    for (const auto& [surface, lemma] : entries) {
        lem.exceptions_[ascii_lower(surface)] = ascii_lower(lemma);
    }
    lem.close_table();
    return lem;
}

Lemmatizer Lemmatizer::from_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open lemma exception file " + path.string());
    std::unordered_map<std::string, std::string> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
        if (obj.is_discarded() || !obj.is_object() || !obj.contains("surface") ||
            !obj.contains("lemma")) {
            throw Error("malformed lemma exception at line " + std::to_string(lineno) +
                        " of " + path.string());
        }
        entries[obj["surface"].get<std::string>()] = obj["lemma"].get<std::string>();
    }
    return with_exceptions(entries);
}

// Rewrites each mapped lemma to its own fixpoint so that table outputs are
// stable under a second lemmatize() call. Cycles degrade to identity.
void Lemmatizer::close_table() {
    for (auto& [surface, lemma] : exceptions_) {
        std::string v = lemma;
        std::unordered_set<std::string> seen{v};
        for (;;) {
            auto it = exceptions_.find(v);
            if (it != exceptions_.end() && it->second != v) {
                v = it->second;
                if (!seen.insert(v).second) {  // cycle
                    v = surface;
                    break;
                }
                continue;
            }
            if (!apply_suffix_rule(v)) break;
        }
        lemma = v;
    }
}

std::string Lemmatizer::lemmatize(std::string_view surface) const {
    std::string w = ascii_lower(surface);
    auto it = exceptions_.find(w);
    if (it != exceptions_.end()) return it->second;
    while (apply_suffix_rule(w)) {
        it = exceptions_.find(w);
        if (it != exceptions_.end()) return it->second;
    }
    return w;
}

std::string lemmatize(std::string_view surface) {
    static const Lemmatizer builtin;
    return builtin.lemmatize(surface);
}

std::vector<Token> tokenize(std::string_view text) {
    static const Lemmatizer builtin;
    return tokenize(text, builtin);
}

std::vector<Token> tokenize(std::string_view text, const Lemmatizer& lemmatizer) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (!is_alnum(text[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n && is_alnum(text[j])) ++j;
        if (j - i >= 2) {
            Token tok;
            tok.surface = std::string(text.substr(i, j - i));
            tok.lemma = lemmatizer.lemmatize(tok.surface);
            tok.start = i;
            tok.end = j;
            tokens.push_back(std::move(tok));
        }
        i = j;
    }
    return tokens;
}

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> sentences;
    auto flush = [&](std::size_t begin, std::size_t end) {
        std::string_view piece = trim(text.substr(begin, end - begin));
        if (!piece.empty()) sentences.emplace_back(piece);
    };

    std::size_t start = 0;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (c != '.' && c != '!' && c != '?') {
            ++i;
            continue;
        }
        // Absorb a run of terminal punctuation plus closing quotes/brackets.
        std::size_t punct_end = i + 1;
        while (punct_end < n && (text[punct_end] == '.' || text[punct_end] == '!' ||
                                 text[punct_end] == '?' || text[punct_end] == '"' ||
                                 text[punct_end] == '\'' || text[punct_end] == ')' ||
                                 text[punct_end] == ']')) {
            ++punct_end;
        }
        if (c == '.' && punct_end == i + 1) {
            // The whitespace-delimited chunk ending here decides abbreviations.
            std::size_t w = i;
            while (w > start && !is_ws(text[w - 1])) --w;
            std::string chunk = ascii_lower(text.substr(w, i + 1 - w));
            if (abbreviation_guard().count(chunk)) {
                i = punct_end;
                continue;
            }
        }
        if (punct_end >= n) {
            flush(start, punct_end);
            start = punct_end;
            i = punct_end;
            continue;
        }
        std::size_t next = punct_end;
        while (next < n && is_ws(text[next])) ++next;
        if (next > punct_end && (next == n || is_upper(text[next]))) {
            flush(start, punct_end);
            start = next;
            i = next;
        } else {
            i = punct_end;
        }
    }
    flush(start, n);
    return sentences;
}

}  // namespace topicsum
