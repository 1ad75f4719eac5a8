#include "topicsum/rouge.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "topicsum/error.hpp"
#include "topicsum/textproc.hpp"

namespace topicsum {
namespace {

std::vector<std::string> rouge_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    for (const Token& tok : tokenize(text)) tokens.push_back(ascii_lower(tok.surface));
    return tokens;
}

std::map<std::vector<std::string>, std::size_t> ngram_counts(
    const std::vector<std::string>& tokens, std::size_t n) {
    std::map<std::vector<std::string>, std::size_t> counts;
    if (tokens.size() < n) return counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        ++counts[std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n)];
    }
    return counts;
}

RougeScore from_counts(double overlap, double candidate_total, double reference_total) {
    RougeScore score;
    if (candidate_total > 0.0) score.precision = overlap / candidate_total;
    if (reference_total > 0.0) score.recall = overlap / reference_total;
    if (score.precision + score.recall > 0.0) {
        score.f1 =
            2.0 * score.precision * score.recall / (score.precision + score.recall);
    }
    return score;
}

std::size_t lcs_length(const std::vector<std::string>& a,
                       const std::vector<std::string>& b) {
    if (a.empty() || b.empty()) return 0;
    std::vector<std::size_t> prev(b.size() + 1, 0);
    std::vector<std::size_t> curr(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            if (a[i - 1] == b[j - 1]) {
                curr[j] = prev[j - 1] + 1;
            } else {
                curr[j] = std::max(prev[j], curr[j - 1]);
            }
        }
        std::swap(prev, curr);
    }
    return prev[b.size()];
}

}  // namespace

RougeScore rouge_n(std::string_view candidate, std::string_view reference, int n) {
    if (n != 1 && n != 2) throw Error("rouge_n supports n in {1, 2}");
    const auto size = static_cast<std::size_t>(n);
    auto cand = ngram_counts(rouge_tokens(candidate), size);
    auto ref = ngram_counts(rouge_tokens(reference), size);
    double overlap = 0.0;
    double cand_total = 0.0;
    double ref_total = 0.0;
    for (const auto& [gram, count] : cand) {
        cand_total += static_cast<double>(count);
        auto it = ref.find(gram);
        if (it != ref.end()) {
            overlap += static_cast<double>(std::min(count, it->second));  // clipped
        }
    }
    for (const auto& [gram, count] : ref) ref_total += static_cast<double>(count);
    return from_counts(overlap, cand_total, ref_total);
}

RougeScore rouge_l(std::string_view candidate, std::string_view reference) {
    auto cand = rouge_tokens(candidate);
    auto ref = rouge_tokens(reference);
    double lcs = static_cast<double>(lcs_length(cand, ref));
    return from_counts(lcs, static_cast<double>(cand.size()),
                       static_cast<double>(ref.size()));
}

RougeScores rouge_all(std::string_view candidate, std::string_view reference) {
    return RougeScores{rouge_n(candidate, reference, 1), rouge_n(candidate, reference, 2),
                       rouge_l(candidate, reference)};
}

}  // namespace topicsum
