#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "sumforge/error.hpp"
#include "sumforge/klsum.hpp"
#include "test_helpers.hpp"

using namespace sumforge;

namespace {

UnigramDistribution from_probs(std::map<std::string, double> probs) {
    UnigramDistribution d;
    d.probs = std::move(probs);
    return d;
}

// Exact divergences of every sentence subset, obeying the same budget.
double exhaustive_min_divergence(const Document& doc, const KlConfig& config) {
    std::set<std::string> vocab;
    std::vector<Token> all;
    for (const auto& s : doc.sentences) {
        for (const auto& t : s.content_tokens) {
            vocab.insert(t.surface);
            all.push_back(t);
        }
    }
    const auto p = unigram_distribution(all, config.epsilon, vocab);
    const std::size_t n = doc.sentences.size();
    double best = kl_divergence(p, unigram_distribution(std::vector<Token>{},
                                                        config.epsilon, vocab));
    for (std::size_t bits = 1; bits < (1u << n); ++bits) {
        std::vector<Token> subset;
        for (std::size_t i = 0; i < n; ++i) {
            if (bits & (1u << i)) {
                const auto& ct = doc.sentences[i].content_tokens;
                subset.insert(subset.end(), ct.begin(), ct.end());
            }
        }
        if (subset.size() > config.word_budget) continue;
        best = std::min(best,
                        kl_divergence(p, unigram_distribution(subset, config.epsilon, vocab)));
    }
    return best;
}

} // namespace

TEST_CASE("kl_divergence of a distribution with itself is exactly zero") {
    const auto p = from_probs({{"a", 0.25}, {"b", 0.75}});
    CHECK(kl_divergence(p, p) == 0.0);
}

TEST_CASE("kl_divergence approaches ln 2 for a point mass against uniform") {
    const std::set<std::string> vocab = {"a", "b"};
    std::vector<Token> heavy;
    for (int i = 0; i < 1000; ++i) heavy.push_back({"a", i});
    const auto p = unigram_distribution(heavy, 1e-6, vocab);
    const auto uniform = unigram_distribution(std::vector<Token>{}, 1e-6, vocab);
    CHECK(kl_divergence(p, uniform) == doctest::Approx(std::log(2.0)).epsilon(1e-6));
}

TEST_CASE("kl_divergence is nonnegative and matches a direct sum") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> mass(0.01, 1.0);
    for (int iter = 0; iter < 1000; ++iter) {
        const int v = 2 + static_cast<int>(rng() % 6);
        std::map<std::string, double> pw, qw;
        double ps = 0.0, qs = 0.0;
        for (int i = 0; i < v; ++i) {
            const std::string w(1, static_cast<char>('a' + i));
            pw[w] = mass(rng);
            qw[w] = mass(rng);
            ps += pw[w];
            qs += qw[w];
        }
        for (auto& [w, x] : pw) x /= ps;
        for (auto& [w, x] : qw) x /= qs;
        const auto p = from_probs(pw);
        const auto q = from_probs(qw);
        const double kl = kl_divergence(p, q);
        CHECK(kl >= 0.0);
        double direct = 0.0;
        for (const auto& [w, x] : pw) direct += x * std::log(x / qw.at(w));
        CHECK(kl == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("kl_divergence rejects mismatched supports") {
    const auto p = from_probs({{"a", 0.5}, {"b", 0.5}});
    const auto q = from_probs({{"a", 0.5}, {"c", 0.5}});
    CHECK_THROWS_AS(kl_divergence(p, q), Error);
    const auto shorter = from_probs({{"a", 1.0}});
    CHECK_THROWS_AS(kl_divergence(p, shorter), Error);
}

TEST_CASE("a single-sentence document is summarized by that sentence") {
    const auto doc = helpers::document("Weld weld strength held.");
    const Summary summary = summarize_klsum(doc);
    CHECK(summary.sentence_indices == std::vector<int>{0});
    CHECK(summary.text == "Weld weld strength held.");
}

TEST_CASE("a duplicated sentence is selected exactly once") {
    const auto doc = helpers::document("Weld weld plate held. Weld weld plate held.");
    const Summary summary = summarize_klsum(doc);
    CHECK(summary.sentence_indices == std::vector<int>{0});
}

TEST_CASE("accepted divergences strictly decrease") {
    const auto doc = helpers::document(
        "Weld strength grew with speed. Grain size shrank with speed and heat. "
        "Hardness dropped near the weld zone line. Weld zone grain size varied. "
        "Speed and heat set the weld strength.",
        {"the", "and", "with"});
    KlConfig config;
    config.epsilon = 0.05; // mild smoothing lets the greedy run several steps
    const Summary summary = summarize_klsum(doc, config);
    REQUIRE(summary.scores.size() == summary.sentence_indices.size());
    REQUIRE(!summary.scores.empty());
    // scores are document-ordered; recover acceptance order by sorting descending
    std::vector<double> accepted = summary.scores;
    std::sort(accepted.begin(), accepted.end(), std::greater<>());
    for (std::size_t i = 1; i < accepted.size(); ++i) {
        CHECK(accepted[i] < accepted[i - 1] - 1e-12);
    }
    CHECK(summary.sentence_indices.size() <= doc.sentences.size());
}

TEST_CASE("reported scores agree with the public operations") {
    const auto doc = helpers::document(
        "Weld strength grew with speed. Grain size shrank with heat. "
        "Hardness dropped near the zone. Speed set the strength.",
        {"the", "with"});
    KlConfig config;
    config.epsilon = 0.05;
    const Summary summary = summarize_klsum(doc, config);
    REQUIRE(!summary.sentence_indices.empty());

    std::set<std::string> vocab;
    std::vector<Token> all;
    for (const auto& s : doc.sentences) {
        for (const auto& t : s.content_tokens) {
            vocab.insert(t.surface);
            all.push_back(t);
        }
    }
    const auto p = unigram_distribution(all, config.epsilon, vocab);
    // the last acceptance corresponds to the full selected set
    std::vector<Token> selected;
    for (int idx : summary.sentence_indices) {
        const auto& ct = doc.sentences[idx].content_tokens;
        selected.insert(selected.end(), ct.begin(), ct.end());
    }
    const double final_div =
        kl_divergence(p, unigram_distribution(selected, config.epsilon, vocab));
    double reported_min = summary.scores.front();
    for (double s : summary.scores) reported_min = std::min(reported_min, s);
    CHECK(final_div == doctest::Approx(reported_min).epsilon(1e-12));
}

TEST_CASE("greedy divergence is bounded below by the exhaustive optimum") {
    std::mt19937 rng(47);
    const std::vector<std::string> lexicon = {"weld", "grain", "zone", "speed", "heat",
                                              "alloy"};
    for (int iter = 0; iter < 60; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 4);
        std::string raw;
        for (int s = 0; s < n; ++s) {
            const int L = 1 + static_cast<int>(rng() % 5);
            for (int i = 0; i < L; ++i) {
                raw += lexicon[rng() % lexicon.size()];
                raw += ' ';
            }
            raw.back() = '.';
            raw += ' ';
        }
        const auto doc = helpers::document(raw);
        KlConfig config;
        config.epsilon = 0.1;
        const Summary summary = summarize_klsum(doc, config);

        std::set<std::string> vocab;
        std::vector<Token> all;
        for (const auto& s : doc.sentences) {
            for (const auto& t : s.content_tokens) {
                vocab.insert(t.surface);
                all.push_back(t);
            }
        }
        const auto p = unigram_distribution(all, config.epsilon, vocab);
        std::vector<Token> selected;
        for (int idx : summary.sentence_indices) {
            const auto& ct = doc.sentences[idx].content_tokens;
            selected.insert(selected.end(), ct.begin(), ct.end());
        }
        const double greedy =
            kl_divergence(p, unigram_distribution(selected, config.epsilon, vocab));
        CHECK(greedy >= exhaustive_min_divergence(doc, config) - 1e-12);
    }
}

TEST_CASE("word budget is strict and the search continues with shorter sentences") {
    // first pick would be the long sentence; budget forces the short ones
    const auto doc = helpers::document(
        "Weld grain zone speed heat alloy strength hardness. Weld grain. Zone speed.");
    KlConfig config;
    config.word_budget = 4;
    config.epsilon = 0.1;
    const Summary summary = summarize_klsum(doc, config);
    std::size_t total = 0;
    for (int idx : summary.sentence_indices) {
        total += doc.sentences[idx].content_tokens.size();
    }
    CHECK(total <= config.word_budget);
    CHECK(!summary.sentence_indices.empty());
    for (int idx : summary.sentence_indices) CHECK(idx != 0);
}

TEST_CASE("sentence cap stops the greedy loop") {
    const auto doc = helpers::document(
        "Weld strength grew. Grain size shrank. Hardness dropped. Speed varied.");
    KlConfig config;
    config.epsilon = 0.1;
    const Summary summary = summarize_klsum(doc, config, 2);
    CHECK(summary.sentence_indices.size() <= 2);
}

TEST_CASE("summarize_klsum error paths") {
    const auto doc = helpers::document("Weld weld held.");
    KlConfig bad_budget;
    bad_budget.word_budget = 0;
    CHECK_THROWS_AS(summarize_klsum(doc, bad_budget), Error);
    KlConfig bad_eps;
    bad_eps.epsilon = 0.0;
    CHECK_THROWS_AS(summarize_klsum(doc, bad_eps), Error);
    CHECK_THROWS_AS(summarize_klsum(doc, KlConfig{}, 0), Error);
    Document empty;
    empty.id = "none";
    CHECK_THROWS_AS(summarize_klsum(empty), Error);
}
