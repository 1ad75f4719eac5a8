#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "topicsum/rand_util.hpp"
#include "topicsum/rouge.hpp"

using namespace topicsum;

namespace {

// Brute-force LCS: enumerate every subsequence of the shorter sequence and
// keep the longest one that is also a subsequence of the other. Exponential,
// so only used on short sequences.
bool is_subsequence(const std::vector<std::string>& needle,
                    const std::vector<std::string>& haystack) {
    std::size_t i = 0;
    for (const std::string& word : haystack) {
        if (i < needle.size() && needle[i] == word) ++i;
    }
    return i == needle.size();
}

std::size_t brute_lcs(const std::vector<std::string>& a,
                      const std::vector<std::string>& b) {
    const auto& shorter = a.size() <= b.size() ? a : b;
    const auto& longer = a.size() <= b.size() ? b : a;
    std::size_t best = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << shorter.size()); ++mask) {
        std::vector<std::string> subseq;
        for (std::size_t i = 0; i < shorter.size(); ++i) {
            if (mask & (std::size_t{1} << i)) subseq.push_back(shorter[i]);
        }
        if (subseq.size() > best && is_subsequence(subseq, longer)) {
            best = subseq.size();
        }
    }
    return best;
}

std::string join(const std::vector<std::string>& words) {
    std::string out;
    for (const std::string& w : words) {
        if (!out.empty()) out += ' ';
        out += w;
    }
    return out;
}

std::vector<std::string> random_words(std::mt19937_64& rng, std::size_t max_len,
                                      std::size_t alphabet) {
    static const std::vector<std::string> pool = {"aa", "bb", "cc", "dd", "ee",
                                                  "ff", "gg", "hh"};
    std::vector<std::string> out;
    const std::size_t len = bounded(rng, max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(pool[bounded(rng, std::min(alphabet, pool.size()))]);
    }
    return out;
}

}  // namespace

TEST_CASE("rouge_n hand-computed pair") {
    RougeScore r1 = rouge_n("the cat sat", "the cat", 1);
    CHECK(r1.precision == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(r1.recall == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r1.f1 == doctest::Approx(0.8).epsilon(1e-9));

    RougeScore r2 = rouge_n("the cat sat", "the cat", 2);
    CHECK(r2.precision == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r2.recall == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r2.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("rouge identity and empty cases") {
    CHECK(rouge_n("a good long summary", "a good long summary", 1).f1 == 1.0);
    CHECK(rouge_n("a good long summary", "a good long summary", 2).f1 == 1.0);
    CHECK(rouge_l("a good long summary", "a good long summary").f1 == 1.0);
    CHECK(rouge_n("", "anything here", 1).f1 == 0.0);
    CHECK(rouge_n("anything here", "", 1).f1 == 0.0);
    CHECK(rouge_l("", "").f1 == 0.0);
    CHECK(rouge_l("alpha beta", "gamma delta").f1 == 0.0);
}

TEST_CASE("rouge_l hand-computed pair") {
    RougeScore rl = rouge_l("the cat sat", "the cat");
    CHECK(rl.precision == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(rl.recall == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rl.f1 == doctest::Approx(0.8).epsilon(1e-9));
}

TEST_CASE("rouge tokens are lowercased, not lemmatized") {
    // "Cats" vs "cats" must match; "cats" vs "cat" must not
    CHECK(rouge_n("Cats sleep", "cats sleep", 1).f1 == 1.0);
    CHECK(rouge_n("cats", "cat", 1).f1 == 0.0);
}

TEST_CASE("clipping caps repeated candidate tokens at the reference count") {
    // candidate repeats "aa" 4 times; reference holds it twice
    RougeScore r = rouge_n("aa aa aa aa", "aa aa zz", 1);
    CHECK(r.precision == doctest::Approx(2.0 / 4.0).epsilon(1e-12));
    CHECK(r.recall == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("f1 is symmetric under candidate/reference swap") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        std::string a = join(random_words(rng, 10, 5));
        std::string b = join(random_words(rng, 10, 5));
        for (int n = 1; n <= 2; ++n) {
            RougeScore ab = rouge_n(a, b, n);
            RougeScore ba = rouge_n(b, a, n);
            CHECK(ab.f1 == doctest::Approx(ba.f1).epsilon(1e-12));
            CHECK(ab.precision == doctest::Approx(ba.recall).epsilon(1e-12));
        }
        RougeScore lab = rouge_l(a, b);
        RougeScore lba = rouge_l(b, a);
        CHECK(lab.f1 == doctest::Approx(lba.f1).epsilon(1e-12));
    }
}

TEST_CASE("rouge_l equals brute-force LCS on short sequences") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::string> a = random_words(rng, 12, 4);
        std::vector<std::string> b = random_words(rng, 12, 4);
        RougeScore rl = rouge_l(join(a), join(b));
        const double lcs = static_cast<double>(brute_lcs(a, b));
        if (a.empty() || b.empty()) {
            CHECK(rl.f1 == 0.0);
        } else {
            CHECK(rl.precision ==
                  doctest::Approx(lcs / static_cast<double>(a.size())).epsilon(1e-12));
            CHECK(rl.recall ==
                  doctest::Approx(lcs / static_cast<double>(b.size())).epsilon(1e-12));
        }
    }
}
