#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sumforge/error.hpp"
#include "sumforge/rouge.hpp"
#include "test_helpers.hpp"

using namespace sumforge;

namespace {

NGramMultiset grams(const std::vector<std::string>& words, int n) {
    const std::vector<std::vector<Token>> seq = {helpers::tokens(words)};
    return ngram_multiset(seq, n);
}

} // namespace

TEST_CASE("identical multisets score 1.0 everywhere") {
    const auto g = grams({"a", "b", "c"}, 1);
    const RougeScore score = rouge_n(g, g);
    CHECK(score.recall == 1.0);
    CHECK(score.precision == 1.0);
    CHECK(score.f1 == 1.0);
    CHECK(score.overlap == 3);
}

TEST_CASE("worked overlap example at n=1 and n=2") {
    {
        const RougeScore s = rouge_n(grams({"a", "b", "c"}, 1), grams({"a", "b", "d"}, 1));
        CHECK(s.overlap == 2);
        CHECK(s.recall == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(s.precision == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(s.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    }
    {
        const RougeScore s = rouge_n(grams({"a", "b", "c"}, 2), grams({"a", "b", "d"}, 2));
        CHECK(s.overlap == 1);
        CHECK(s.recall == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(s.precision == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(s.f1 == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("disjoint grams score zero") {
    const RougeScore s = rouge_n(grams({"a", "b"}, 1), grams({"c", "d"}, 1));
    CHECK(s.overlap == 0);
    CHECK(s.recall == 0.0);
    CHECK(s.precision == 0.0);
    CHECK(s.f1 == 0.0);
}

TEST_CASE("rouge_n error paths") {
    CHECK_THROWS_AS(rouge_n(grams({"a"}, 1), grams({"a", "b"}, 2)), Error);
    try {
        rouge_n(grams({"a"}, 2), grams({"a", "b", "c"}, 2)); // candidate too short is fine
    } catch (...) {
        FAIL("short candidate must not throw");
    }
    // empty reference is an error, not a NaN
    CHECK_THROWS_AS(rouge_n(grams({"a", "b"}, 2), grams({"a"}, 2)), Error);
}

TEST_CASE("swapping candidate and reference swaps recall and precision") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 300; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 3);
        auto gen = [&]() {
            std::vector<std::string> words;
            const int L = n + static_cast<int>(rng() % 10);
            for (int i = 0; i < L; ++i) {
                words.push_back(std::string(1, static_cast<char>('a' + (rng() % 5))));
            }
            return words;
        };
        const auto a = grams(gen(), n);
        const auto b = grams(gen(), n);
        const RougeScore ab = rouge_n(a, b);
        const RougeScore ba = rouge_n(b, a);
        CHECK(ab.recall == doctest::Approx(ba.precision).epsilon(1e-12));
        CHECK(ab.precision == doctest::Approx(ba.recall).epsilon(1e-12));
        CHECK(ab.f1 == doctest::Approx(ba.f1).epsilon(1e-12));
        CHECK(ab.f1 <= 2.0 * std::min(ab.precision, ab.recall) + 1e-12);
        CHECK(ab.overlap <= std::min(ab.model_total, ab.reference_total));
    }
}

TEST_CASE("appending a matchable gram never decreases recall") {
    std::mt19937 rng(29);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<std::string> cand, ref;
        const int Lc = static_cast<int>(rng() % 8);
        const int Lr = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < Lc; ++i) cand.push_back(std::string(1, 'a' + (rng() % 3)));
        for (int i = 0; i < Lr; ++i) ref.push_back(std::string(1, 'a' + (rng() % 3)));
        const RougeScore before = rouge_n(grams(cand, 1), grams(ref, 1));
        // append a reference token
        cand.push_back(ref[rng() % ref.size()]);
        const RougeScore after = rouge_n(grams(cand, 1), grams(ref, 1));
        CHECK(after.recall >= before.recall - 1e-15);
    }
}

TEST_CASE("rouge_n matches the brute-force enumerator") {
    std::mt19937 rng(31);
    for (int iter = 0; iter < 300; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 3);
        auto gen = [&]() {
            std::vector<std::string> words;
            const int L = static_cast<int>(rng() % 13);
            for (int i = 0; i < L; ++i) {
                words.push_back(std::string(1, static_cast<char>('a' + (rng() % 5))));
            }
            return words;
        };
        const auto cand = gen();
        auto ref = gen();
        const auto expected = oracles::rouge_brute_force(cand, ref, n);
        if (expected.reference_total == 0) continue;
        const RougeScore got = rouge_n(grams(cand, n), grams(ref, n));
        CHECK(got.overlap == expected.overlap);
        CHECK(got.model_total == expected.model_total);
        CHECK(got.reference_total == expected.reference_total);
        CHECK(got.recall == doctest::Approx(expected.recall).epsilon(1e-12));
        CHECK(got.precision == doctest::Approx(expected.precision).epsilon(1e-12));
        CHECK(got.f1 == doctest::Approx(expected.f1).epsilon(1e-12));
    }
}

TEST_CASE("evaluate_text pipes both sides through the same pipeline") {
    const std::string text = "The weld held. The test ran twice.";
    const RougeScore self = evaluate_text(text, text, 1);
    CHECK(self.recall == 1.0);
    CHECK(self.precision == 1.0);
    CHECK(self.f1 == 1.0);

    const RougeScore s = evaluate_text("a b c", "a b d", 1);
    CHECK(s.recall == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(s.precision == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(s.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("punctuation-only reference raises EmptyReference") {
    try {
        evaluate_text("a b c", "... ;;", 1);
        FAIL("expected EmptyReference");
    } catch (const Error& e) {
        CHECK(e.code() == errc::empty_reference);
    }
    // reference with tokens but too short for the order is empty as well
    try {
        evaluate_text("a b c", "weld", 2);
        FAIL("expected EmptyReference");
    } catch (const Error& e) {
        CHECK(e.code() == errc::empty_reference);
    }
}

TEST_CASE("an extractive summary has unigram precision 1 against its source") {
    const auto doc = helpers::document(
        "Alpha weld held firm. Beta weld cracked early. Gamma weld bent around. "
        "Delta weld sheared off.");
    const Summary summary = make_summary(Algorithm::luhn, doc, {1, 3});
    const RougeScore s = evaluate_summary(summary, doc.raw_text, 1);
    CHECK(s.precision == 1.0);
    CHECK(s.recall < 1.0);
}
