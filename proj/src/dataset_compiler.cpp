#include "topicsum/dataset_compiler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_set>

#include "topicsum/error.hpp"
#include "topicsum/rand_util.hpp"
#include "topicsum/textproc.hpp"

namespace topicsum {

nlohmann::json CompileStats::to_json() const {
    return nlohmann::json{{"input_count", input_count},
                          {"assigned_count", assigned_count},
                          {"discarded_multi_dominant", discarded_multi_dominant},
                          {"discarded_low_frequency", discarded_low_frequency},
                          {"discarded_excluded", discarded_excluded},
                          {"pairs_formed", pairs_formed},
                          {"leftover_same_topic", leftover_same_topic}};
}

std::string interleave_sentences(const std::vector<std::string>& first,
                                 const std::vector<std::string>& second) {
    std::string out;
    const std::size_t rounds = std::max(first.size(), second.size());
    for (std::size_t i = 0; i < rounds; ++i) {
        if (i < first.size()) {
            if (!out.empty()) out += ' ';
            out += first[i];
        }
        if (i < second.size()) {
            if (!out.empty()) out += ' ';
            out += second[i];
        }
    }
    return out;
}

std::pair<SuperArticle, SuperArticle> make_pair_articles(const Document& a1,
                                                         const Document& a2,
                                                         bool identical_pair_text) {
    if (!a1.summary || !a2.summary) throw Error("pair sources must carry summaries");
    if (!a1.topic || !a2.topic) throw Error("pair sources must carry topics");
    const std::vector<std::string> s1 = split_sentences(a1.text);
    const std::vector<std::string> s2 = split_sentences(a2.text);

    SuperArticle prime;
    prime.id = a1.id + "+" + a2.id;
    prime.text = interleave_sentences(s1, s2);
    prime.summary = *a1.summary;
    prime.topic = *a1.topic;
    prime.source_ids = {a1.id, a2.id};

    SuperArticle second;
    second.id = a2.id + "+" + a1.id;
    second.text = identical_pair_text ? prime.text : interleave_sentences(s2, s1);
    second.summary = *a2.summary;
    second.topic = *a2.topic;
    second.source_ids = {a2.id, a1.id};

    return {std::move(prime), std::move(second)};
}

std::pair<Corpus, CompileStats> build_intermediate(const Corpus& corpus,
                                                   const TopicModel& topic_model,
                                                   const TfIdfModel& tfidf,
                                                   double dominance_ratio) {
    CompileStats stats;
    stats.input_count = corpus.size();
    std::vector<Document> retained;
    for (const Document& doc : corpus) {
        if (!doc.summary) throw Error("document " + doc.id + " has no summary");
        TopicAssignment assignment;
        try {
            assignment = topic_model.assign_topic(tfidf, *doc.summary, dominance_ratio);
        } catch (const Error& e) {
            throw Error("document " + doc.id + ": " + e.what());
        }
        if (assignment.multi_dominant) {
            ++stats.discarded_multi_dominant;
            continue;
        }
        Document assigned = doc;
        assigned.topic = assignment.best_topic;
        retained.push_back(std::move(assigned));
    }
    stats.assigned_count = retained.size();
    return {Corpus(std::move(retained)), stats};
}

std::pair<std::vector<SuperArticle>, CompileStats> compile_pairs(
    const Corpus& intermediate, std::uint64_t seed, bool identical_pair_text) {
    CompileStats stats;
    stats.input_count = intermediate.size();
    stats.assigned_count = intermediate.size();
    for (const Document& doc : intermediate) {
        if (!doc.topic) throw Error("document " + doc.id + " has no topic");
        if (!doc.summary) throw Error("document " + doc.id + " has no summary");
    }

    std::vector<const Document*> pool;
    pool.reserve(intermediate.size());
    for (const Document& doc : intermediate) pool.push_back(&doc);

    std::mt19937_64 rng(seed);
    std::vector<SuperArticle> articles;
    for (;;) {
        if (pool.empty()) break;
        std::set<std::string> distinct;
        for (const Document* doc : pool) distinct.insert(*doc->topic);
        if (distinct.size() < 2) {
            stats.leftover_same_topic = pool.size();
            break;
        }
        const std::size_t i = static_cast<std::size_t>(bounded(rng, pool.size()));
        const Document* a1 = pool[i];
        std::vector<std::size_t> other_topic;
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (*pool[j]->topic != *a1->topic) other_topic.push_back(j);
        }
        const std::size_t k =
            other_topic[static_cast<std::size_t>(bounded(rng, other_topic.size()))];
        const Document* a2 = pool[k];

        auto [prime, second] = make_pair_articles(*a1, *a2, identical_pair_text);
        articles.push_back(std::move(prime));
        articles.push_back(std::move(second));
        ++stats.pairs_formed;

        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(std::max(i, k)));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(std::min(i, k)));
    }
    return {std::move(articles), stats};
}

std::pair<std::vector<SuperArticle>, CompileStats> compile_dataset(
    const Corpus& corpus, const TopicModel& topic_model, const TfIdfModel& tfidf,
    const CompileOptions& options) {
    auto [intermediate, stats] =
        build_intermediate(corpus, topic_model, tfidf, options.dominance_ratio);

    std::vector<Document> kept;
    if (!options.exclude_topics.empty()) {
        const std::unordered_set<std::string> excluded(options.exclude_topics.begin(),
                                                       options.exclude_topics.end());
        for (const Document& doc : intermediate) {
            if (excluded.count(*doc.topic)) {
                ++stats.discarded_excluded;
            } else {
                kept.push_back(doc);
            }
        }
    } else {
        kept.assign(intermediate.begin(), intermediate.end());
    }

    Corpus filtered = filter_min_topic_frequency(Corpus(std::move(kept)),
                                                 std::max<std::size_t>(options.min_topic_docs, 1));
    stats.discarded_low_frequency = stats.assigned_count - stats.discarded_excluded -
                                    filtered.size();
    stats.assigned_count = filtered.size();

    auto [articles, pair_stats] =
        compile_pairs(filtered, options.seed, options.identical_pair_text);
    stats.pairs_formed = pair_stats.pairs_formed;
    stats.leftover_same_topic = pair_stats.leftover_same_topic;
    return {std::move(articles), stats};
}

std::array<std::vector<SuperArticle>, 3> split_dataset(
    const std::vector<SuperArticle>& super_articles, SplitRatios ratios,
    std::uint64_t seed) {
    if (ratios.train <= 0.0 || ratios.val <= 0.0 || ratios.test <= 0.0) {
        throw Error("split ratios must be positive");
    }
    if (std::abs(ratios.train + ratios.val + ratios.test - 1.0) > 1e-9) {
        throw Error("split ratios must sum to 1");
    }
    if (super_articles.size() % 2 != 0) {
        throw Error("super-article list must hold adjacent a'/a'' pairs (even length)");
    }
    const std::size_t pair_count = super_articles.size() / 2;
    if (pair_count < 3) throw Error("need at least 3 pairs to split");

    std::vector<std::size_t> order(pair_count);
    for (std::size_t i = 0; i < pair_count; ++i) order[i] = i;
    std::mt19937_64 rng(seed);
    shuffle_in_place(order, rng);

    // Cumulative flooring keeps the three counts non-negative and exact.
    const double n = static_cast<double>(pair_count);
    const auto cum1 = static_cast<std::size_t>(std::floor(n * ratios.train + 1e-9));
    const auto cum2 =
        static_cast<std::size_t>(std::floor(n * (ratios.train + ratios.val) + 1e-9));

    std::array<std::vector<SuperArticle>, 3> out;
    for (std::size_t rank = 0; rank < pair_count; ++rank) {
        const std::size_t slot = rank < cum1 ? 0 : (rank < cum2 ? 1 : 2);
        const std::size_t pair_index = order[rank];
        out[slot].push_back(super_articles[2 * pair_index]);
        out[slot].push_back(super_articles[2 * pair_index + 1]);
    }
    return out;
}

nlohmann::json super_article_to_json(const SuperArticle& article) {
    return nlohmann::json{{"id", article.id},
                          {"text", article.text},
                          {"summary", article.summary},
                          {"topic", article.topic},
                          {"source_ids", article.source_ids}};
}

SuperArticle super_article_from_json(const nlohmann::json& obj) {
    SuperArticle article;
    article.id = obj.at("id").get<std::string>();
    article.text = obj.at("text").get<std::string>();
    article.summary = obj.at("summary").get<std::string>();
    article.topic = obj.at("topic").get<std::string>();
    auto ids = obj.at("source_ids").get<std::vector<std::string>>();
    if (ids.size() != 2) throw Error("source_ids must hold exactly two ids");
    article.source_ids = {ids[0], ids[1]};
    return article;
}

}  // namespace topicsum
