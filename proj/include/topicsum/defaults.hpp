#pragma once

#include <cstddef>

namespace topicsum::defaults {

// Number of representative terms extracted per topic.
inline constexpr std::size_t kTopTerms = 100;

// Topics backed by fewer documents than this are dropped before modeling.
inline constexpr std::size_t kMinTopicDocs = 20;

// Minimum STAS for a summary to count as actively discussing the topic
// (inclusive comparison).
inline constexpr double kRelevanceThreshold = 0.6960;

// A text is multi-dominant when the runner-up similarity reaches this
// fraction of the best one.
inline constexpr double kDominanceRatio = 0.9;

// Control-token literals.
inline constexpr const char* kTagMarker = "[TAG]";
inline constexpr const char* kPrependSeparator = " | ";

}  // namespace topicsum::defaults
