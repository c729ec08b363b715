#pragma once

#include <cstddef>
#include <string>

#include "sumforge/corpus.hpp"
#include "sumforge/summary.hpp"
#include "sumforge/termstats.hpp"
#include "sumforge/textprep.hpp"

namespace sumforge {

struct RougeScore {
    int n = 1;
    double recall = 0.0;
    double precision = 0.0;
    double f1 = 0.0;
    std::size_t overlap = 0;         // clipped matched gram count
    std::size_t model_total = 0;     // grams in the candidate
    std::size_t reference_total = 0; // grams in the reference
};

/// Clipped n-gram overlap: each gram is credited min(candidate count,
/// reference count). recall = overlap/reference_total, precision =
/// overlap/model_total, f1 their harmonic mean (0 when both are 0). An empty
/// reference is an error, not a NaN.
RougeScore rouge_n(const NGramMultiset& candidate, const NGramMultiset& reference);

struct EvalOptions {
    bool filter_stopwords = false; // evaluation keeps stopwords by default
    StopwordSet stopwords;         // used only when filter_stopwords is set
    SplitOptions split;
};

/// Runs both texts through the identical preprocessing pipeline (same
/// splitter, same tokenizer, same stopword setting) and scores the candidate
/// against the reference. N-grams never cross sentence boundaries.
RougeScore evaluate_text(const std::string& candidate_text,
                         const std::string& reference_text, int n,
                         const EvalOptions& options = {});

RougeScore evaluate_summary(const Summary& summary, const std::string& reference_text,
                            int n, const EvalOptions& options = {});

} // namespace sumforge
