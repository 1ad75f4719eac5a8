#pragma once

#include <cstdint>

#include "topicsum/corpus.hpp"

namespace topicsum {

// Deterministic synthetic corpus: 6 topics x 25 documents, each document
// 5-10 sentences built from a per-topic keyword pool plus a shared
// common-word pool, with a 1-2 sentence summary in the same vein. Topic
// keyword pools are disjoint across topics, so the corpus cleanly separates
// under tf-idf prototypes. Used by tests and the README walkthrough.
Corpus generate_fixture(std::uint64_t seed);

}  // namespace topicsum
