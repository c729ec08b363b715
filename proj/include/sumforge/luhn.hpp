#pragma once

#include <cstddef>
#include <unordered_set>

#include "sumforge/corpus.hpp"
#include "sumforge/document.hpp"
#include "sumforge/summary.hpp"

namespace sumforge {

/// Non-stopwords whose corpus frequency reaches f_min.
struct SignificantWordSet {
    std::unordered_set<std::string> words;
    std::size_t f_min = 2;
};

struct LuhnParams {
    std::size_t f_min = 2;
    int gap_limit = 4;            // max run of non-significant tokens bridged inside a cluster
    bool positional_boost = false; // multiply scores by 1/(1 + index/n)
};

SignificantWordSet significant_words(const FrequencyTable& freq,
                                     const StopwordSet& stopwords,
                                     std::size_t f_min);

/// Best value of (significant count)^2 / span over every token window that
/// starts and ends at a significant token and bridges at most gap_limit
/// consecutive non-significant tokens. 0 if the sentence has no significant
/// token.
double luhn_score(const Sentence& sentence, const SignificantWordSet& significant,
                  int gap_limit);

Summary summarize_luhn(const Document& document, const StopwordSet& stopwords,
                       int k, const LuhnParams& params = {});

} // namespace sumforge
