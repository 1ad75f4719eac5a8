#pragma once

#include <string>
#include <string_view>

#include "topicsum/defaults.hpp"
#include "topicsum/textproc.hpp"
#include "topicsum/topic_model.hpp"

namespace topicsum {

enum class ControlMethod { Prepend, Tag, PrependTag };

std::string control_method_name(ControlMethod method);

struct ControlOptions {
    std::string marker = defaults::kTagMarker;
    std::string separator = defaults::kPrependSeparator;
};

struct ControlledDocument {
    std::string text;
    std::string topic;
    ControlMethod method = ControlMethod::Prepend;
    std::size_t tag_count = 0;
};

// "<topic><separator><original text>"; the body is untouched.
ControlledDocument prepend_topic(std::string_view text, const std::string& topic,
                                 const ControlOptions& options = {});

// Surrounds every token whose lemma belongs to the term set with the marker:
// "word" -> "[TAG] word [TAG]". Everything between tokens is copied verbatim,
// so stripping the markers restores the input byte-for-byte. Text that
// already contains the marker is rejected.
ControlledDocument tag_document(std::string_view text, const TermSet& term_set,
                                const ControlOptions& options = {});
ControlledDocument tag_document(std::string_view text, const TermSet& term_set,
                                const Lemmatizer& lemmatizer,
                                const ControlOptions& options = {});

// tag_document then prepend_topic; the prepended label itself is never
// tagged. Requires term_set.topic == topic.
ControlledDocument apply_both(std::string_view text, const std::string& topic,
                              const TermSet& term_set, const ControlOptions& options = {});
ControlledDocument apply_both(std::string_view text, const std::string& topic,
                              const TermSet& term_set, const Lemmatizer& lemmatizer,
                              const ControlOptions& options = {});

// Inverse transforms, for round-trip checks and downstream cleanup.
std::string strip_tags(std::string_view tagged_text, const ControlOptions& options = {});
std::string strip_prefix(std::string_view prepended_text, const std::string& topic,
                         const ControlOptions& options = {});

}  // namespace topicsum
