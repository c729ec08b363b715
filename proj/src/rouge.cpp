#include "sumforge/rouge.hpp"

#include <algorithm>
#include <vector>

#include "sumforge/error.hpp"

namespace sumforge {

RougeScore rouge_n(const NGramMultiset& candidate, const NGramMultiset& reference) {
    if (candidate.n != reference.n) {
        throw Error(errc::order_mismatch, "candidate and reference use different n-gram orders");
    }
    if (reference.total == 0) {
        throw Error(errc::empty_reference, "reference contains no n-grams");
    }

    std::size_t overlap = 0;
    auto ic = candidate.counts.begin();
    auto ir = reference.counts.begin();
    while (ic != candidate.counts.end() && ir != reference.counts.end()) {
        if (ic->first < ir->first) {
            ++ic;
        } else if (ir->first < ic->first) {
            ++ir;
        } else {
            overlap += std::min(ic->second, ir->second);
            ++ic;
            ++ir;
        }
    }

    RougeScore score;
    score.n = candidate.n;
    score.overlap = overlap;
    score.model_total = candidate.total;
    score.reference_total = reference.total;
    score.recall = static_cast<double>(overlap) / static_cast<double>(reference.total);
    score.precision = candidate.total > 0
                          ? static_cast<double>(overlap) / static_cast<double>(candidate.total)
                          : 0.0;
    const double pr = score.precision + score.recall;
    score.f1 = pr > 0.0 ? 2.0 * score.precision * score.recall / pr : 0.0;
    return score;
}

namespace {

NGramMultiset text_ngrams(const std::string& text, int n, const EvalOptions& options) {
    Document doc;
    doc.id = "(text)";
    doc.raw_text = text;
    std::vector<Sentence> sentences = split_sentences(doc, options.split);
    std::vector<std::vector<Token>> sequences;
    sequences.reserve(sentences.size());
    for (Sentence& sentence : sentences) {
        if (options.filter_stopwords) {
            sequences.push_back(remove_stopwords(sentence.tokens, options.stopwords));
        } else {
            sequences.push_back(std::move(sentence.tokens));
        }
    }
    return ngram_multiset(sequences, n);
}

} // namespace

RougeScore evaluate_text(const std::string& candidate_text,
                         const std::string& reference_text, int n,
                         const EvalOptions& options) {
    if (n < 1) {
        throw Error(errc::invalid_order, "n-gram order must be at least 1");
    }
    NGramMultiset reference;
    try {
        reference = text_ngrams(reference_text, n, options);
    } catch (const Error& e) {
        if (e.code() == errc::no_sentences) {
            throw Error(errc::empty_reference, "reference text yields no tokens");
        }
        throw;
    }
    const NGramMultiset candidate = text_ngrams(candidate_text, n, options);
    return rouge_n(candidate, reference);
}

RougeScore evaluate_summary(const Summary& summary, const std::string& reference_text,
                            int n, const EvalOptions& options) {
    return evaluate_text(summary.text, reference_text, n, options);
}

} // namespace sumforge
