#include <doctest.h>

#include <random>

#include "topicsum/control_tokens.hpp"
#include "topicsum/error.hpp"
#include "topicsum/fixture.hpp"
#include "topicsum/rand_util.hpp"

using namespace topicsum;

namespace {

TermSet make_terms(std::string topic, std::vector<std::string> lemmas) {
    TermSet ts;
    ts.topic = std::move(topic);
    ts.n = lemmas.size();
    double score = 1.0;
    for (std::string& lemma : lemmas) {
        ts.terms.emplace_back(std::move(lemma), score);
        score -= 0.01;
    }
    return ts;
}

const std::string kTaxSentence =
    "By one estimate, American individuals and businesses together spend 6.1 "
    "billion hours complying with the tax code every year.";

const std::string kTaxSentenceTagged =
    "By one estimate, American individuals and [TAG] businesses [TAG] together "
    "spend 6.1 [TAG] billion [TAG] hours complying with the [TAG] tax [TAG] "
    "code every year.";

}  // namespace

TEST_CASE("prepend_topic") {
    SUBCASE("label, separator, untouched body") {
        ControlledDocument doc = prepend_topic("Match report...", "Sports");
        CHECK(doc.text == "Sports | Match report...");
        CHECK(doc.topic == "Sports");
        CHECK(doc.method == ControlMethod::Prepend);
        CHECK(doc.tag_count == 0);
    }
    SUBCASE("empty body") {
        CHECK(prepend_topic("", "Sports").text == "Sports | ");
    }
    SUBCASE("topics with spaces prepend verbatim") {
        CHECK(prepend_topic("body", "Health Care").text == "Health Care | body");
    }
    SUBCASE("empty topic rejected") {
        CHECK_THROWS_AS(prepend_topic("body", ""), Error);
    }
    SUBCASE("custom separator") {
        ControlOptions options;
        options.separator = ": ";
        CHECK(prepend_topic("body", "Sports", options).text == "Sports: body");
    }
}

TEST_CASE("tag_document reproduces the worked business-and-finance sentence") {
    TermSet terms = make_terms("Business & Finance", {"business", "billion", "tax"});
    ControlledDocument doc = tag_document(kTaxSentence, terms);
    CHECK(doc.text == kTaxSentenceTagged);
    CHECK(doc.tag_count == 3);
    CHECK(doc.method == ControlMethod::Tag);
}

TEST_CASE("tag_document edge cases") {
    SUBCASE("disjoint term set leaves the text unchanged") {
        TermSet terms = make_terms("x", {"zebra", "yak"});
        ControlledDocument doc = tag_document("plain text here", terms);
        CHECK(doc.text == "plain text here");
        CHECK(doc.tag_count == 0);
    }
    SUBCASE("matching is on lemmas: taxes, taxed and tax all hit lemma tax") {
        TermSet terms = make_terms("x", {"tax"});
        ControlledDocument doc = tag_document("taxes taxed tax", terms);
        CHECK(doc.tag_count == 3);
        CHECK(doc.text == "[TAG] taxes [TAG] [TAG] taxed [TAG] [TAG] tax [TAG]");
    }
    SUBCASE("already-tagged text is rejected") {
        TermSet terms = make_terms("x", {"tax"});
        CHECK_THROWS_WITH_AS(tag_document("a [TAG] b [TAG]", terms),
                             doctest::Contains("already tagged"), Error);
    }
    SUBCASE("empty term set is rejected") {
        CHECK_THROWS_AS(tag_document("text", TermSet{"x", {}, 0}), Error);
    }
    SUBCASE("punctuation stays outside the markers") {
        TermSet terms = make_terms("x", {"tax"});
        CHECK(tag_document("tax, then more.", terms).text == "[TAG] tax [TAG], then more.");
    }
}

TEST_CASE("strip_tags inverts tag_document byte-for-byte") {
    TermSet terms = make_terms("x", {"business", "billion", "tax"});
    ControlledDocument doc = tag_document(kTaxSentence, terms);
    CHECK(strip_tags(doc.text) == kTaxSentence);
}

TEST_CASE("tagging the fixture round-trips and counts match an independent scan") {
    Corpus fixture = generate_fixture(3);
    TfIdfModel tfidf = TfIdfModel::fit(fixture);
    TopicModel topics = TopicModel::build(tfidf, fixture);
    Lemmatizer lem;
    for (const Document& doc : fixture) {
        TermSet terms = topics.top_terms(tfidf, *doc.topic, 100);
        ControlledDocument tagged = tag_document(doc.text, terms, lem);
        CHECK(strip_tags(tagged.text) == doc.text);
        // independent recount of tokens whose lemma is in the set
        std::size_t expected = 0;
        std::set<std::string> lemmas;
        for (const auto& [lemma, score] : terms.terms) lemmas.insert(lemma);
        for (const Token& tok : tokenize(doc.text, lem)) {
            if (lemmas.count(tok.lemma)) ++expected;
        }
        CHECK(tagged.tag_count == expected);
        // marker pairs are balanced
        std::size_t markers = 0;
        for (std::size_t at = tagged.text.find("[TAG]"); at != std::string::npos;
             at = tagged.text.find("[TAG]", at + 1)) {
            ++markers;
        }
        CHECK(markers == 2 * tagged.tag_count);
    }
}

TEST_CASE("apply_both composes tag then prepend") {
    TermSet terms = make_terms("Sports", {"game", "team"});
    SUBCASE("tagging inside, label outside") {
        ControlledDocument doc = apply_both("The game was long.", "Sports", terms);
        CHECK(doc.text == "Sports | The [TAG] game [TAG] was long.");
        CHECK(doc.method == ControlMethod::PrependTag);
        CHECK(doc.tag_count == 1);
    }
    SUBCASE("label is never tagged even when it matches a term") {
        TermSet self = make_terms("game", {"game"});
        ControlledDocument doc = apply_both("no match here", "game", self);
        CHECK(doc.text == "game | no match here");
        CHECK(doc.tag_count == 0);
    }
    SUBCASE("no matches reduces to prepend output") {
        TermSet none = make_terms("Sports", {"zebra"});
        ControlledDocument doc = apply_both("plain body", "Sports", none);
        CHECK(doc.text == prepend_topic("plain body", "Sports").text);
    }
    SUBCASE("topic mismatch is a precondition error") {
        CHECK_THROWS_AS(apply_both("body", "Politics", terms), Error);
    }
}

TEST_CASE("custom marker is honored end to end") {
    ControlOptions options;
    options.marker = "<CTRL>";
    TermSet terms = make_terms("x", {"tax"});
    ControlledDocument doc = tag_document("pay tax now", terms, options);
    CHECK(doc.text == "pay <CTRL> tax <CTRL> now");
    CHECK(strip_tags(doc.text, options) == "pay tax now");
}
