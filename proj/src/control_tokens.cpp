#include "topicsum/control_tokens.hpp"

#include <unordered_set>

#include "topicsum/error.hpp"

namespace topicsum {

std::string control_method_name(ControlMethod method) {
    switch (method) {
        case ControlMethod::Prepend: return "prepend";
        case ControlMethod::Tag: return "tag";
        case ControlMethod::PrependTag: return "prepend+tag";
    }
    throw Error("unknown control method");
}

ControlledDocument prepend_topic(std::string_view text, const std::string& topic,
                                 const ControlOptions& options) {
    if (topic.empty()) throw Error("topic must be nonempty");
    ControlledDocument out;
    out.topic = topic;
    out.method = ControlMethod::Prepend;
    out.text = topic + options.separator + std::string(text);
    return out;
}

ControlledDocument tag_document(std::string_view text, const TermSet& term_set,
                                const ControlOptions& options) {
    static const Lemmatizer builtin;
    return tag_document(text, term_set, builtin, options);
}

ControlledDocument tag_document(std::string_view text, const TermSet& term_set,
                                const Lemmatizer& lemmatizer,
                                const ControlOptions& options) {
    if (term_set.terms.empty()) throw Error("term set must be nonempty");
    if (text.find(options.marker) != std::string_view::npos) {
        throw Error("text already tagged");
    }
    std::unordered_set<std::string> lemmas;
    for (const auto& [lemma, score] : term_set.terms) lemmas.insert(lemma);

    ControlledDocument out;
    out.topic = term_set.topic;
    out.method = ControlMethod::Tag;
    out.text.reserve(text.size());
    std::size_t pos = 0;
    for (const Token& tok : tokenize(text, lemmatizer)) {
        out.text.append(text.substr(pos, tok.start - pos));
        if (lemmas.count(tok.lemma)) {
            out.text += options.marker;
            out.text += ' ';
            out.text += tok.surface;
            out.text += ' ';
            out.text += options.marker;
            ++out.tag_count;
        } else {
            out.text += tok.surface;
        }
        pos = tok.end;
    }
    out.text.append(text.substr(pos));
    return out;
}

ControlledDocument apply_both(std::string_view text, const std::string& topic,
                              const TermSet& term_set, const ControlOptions& options) {
    static const Lemmatizer builtin;
    return apply_both(text, topic, term_set, builtin, options);
}

ControlledDocument apply_both(std::string_view text, const std::string& topic,
                              const TermSet& term_set, const Lemmatizer& lemmatizer,
                              const ControlOptions& options) {
    if (term_set.topic != topic) {
        throw Error("term set topic " + term_set.topic + " does not match topic " + topic);
    }
    ControlledDocument tagged = tag_document(text, term_set, lemmatizer, options);
    ControlledDocument out = prepend_topic(tagged.text, topic, options);
    out.method = ControlMethod::PrependTag;
    out.tag_count = tagged.tag_count;
    return out;
}

std::string strip_tags(std::string_view tagged_text, const ControlOptions& options) {
    const std::string open = options.marker + " ";
    const std::string close = " " + options.marker;
    std::string out(tagged_text);
    for (;;) {
        std::size_t at = out.find(open);
        if (at == std::string::npos) break;
        out.erase(at, open.size());
        std::size_t end = out.find(close, at);
        if (end == std::string::npos) throw Error("unbalanced tag marker");
        out.erase(end, close.size());
    }
    return out;
}

std::string strip_prefix(std::string_view prepended_text, const std::string& topic,
                         const ControlOptions& options) {
    const std::string prefix = topic + options.separator;
    if (prepended_text.substr(0, prefix.size()) != prefix) {
        throw Error("text does not start with the prepended topic " + topic);
    }
    return std::string(prepended_text.substr(prefix.size()));
}

}  // namespace topicsum
