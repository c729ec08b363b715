#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sumforge/document.hpp"

namespace sumforge {

/// Smoothed inverse document frequencies over sentence units:
/// idf(w) = ln((n + 1) / (df(w) + 1)) + 1, strictly positive. Words that were
/// never seen look up to the largest idf in the table (unseen = most
/// informative).
class IdfTable {
public:
    IdfTable() = default;
    IdfTable(std::map<std::string, double> values, std::size_t n_units);

    double operator[](const std::string& word) const;
    std::size_t n_units() const noexcept { return n_units_; }
    const std::map<std::string, double>& values() const noexcept { return values_; }

private:
    std::map<std::string, double> values_;
    double max_idf_ = 1.0;
    std::size_t n_units_ = 0;
};

/// Sparse tf*idf weights of one sentence plus their Euclidean norm. Only
/// strictly positive weights are stored.
struct SentenceVector {
    std::map<std::string, double> weights;
    double norm = 0.0;
};

/// epsilon-smoothed unigram probabilities. Keys are the support: with
/// epsilon > 0 that is the whole vocabulary passed in.
struct UnigramDistribution {
    std::map<std::string, double> probs;
};

/// Multiset of contiguous n-grams. Keys are the gram's tokens joined by a
/// single space (surfaces never contain whitespace).
struct NGramMultiset {
    int n = 1;
    std::map<std::string, std::size_t> counts;
    std::size_t total = 0;
};

/// Treats each sentence as an idf document; df counts sentences whose
/// content tokens contain the word.
IdfTable compute_idf(std::span<const Sentence> sentences);

/// weight(w) = occurrences of w among the sentence's content tokens * idf(w).
SentenceVector sentence_vector(const Sentence& sentence, const IdfTable& idf);

/// prob(w) = (count(w) + epsilon) / (total + epsilon * |vocabulary|).
/// Tokens outside the vocabulary are ignored entirely.
UnigramDistribution unigram_distribution(std::span<const Token> tokens,
                                         double smoothing_epsilon,
                                         const std::set<std::string>& vocabulary);

/// All within-sequence contiguous n-grams; grams never cross the boundary
/// between consecutive sequences.
NGramMultiset ngram_multiset(std::span<const std::vector<Token>> token_sequences,
                             int n);

} // namespace sumforge
