#pragma once

#include <string_view>

namespace topicsum {

struct RougeScore {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct RougeScores {
    RougeScore r1;
    RougeScore r2;
    RougeScore rl;
};

// Clipped n-gram overlap over lowercased tokens (no lemmatization, no
// stemming). precision = overlap / candidate n-grams, recall = overlap /
// reference n-grams. Empty texts yield zero components.
RougeScore rouge_n(std::string_view candidate, std::string_view reference, int n);

// Longest common subsequence over token sequences.
RougeScore rouge_l(std::string_view candidate, std::string_view reference);

RougeScores rouge_all(std::string_view candidate, std::string_view reference);

}  // namespace topicsum
