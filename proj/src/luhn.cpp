#include "sumforge/luhn.hpp"

#include <algorithm>
#include <vector>

#include "sumforge/error.hpp"
#include "sumforge/summary.hpp"
#include "sumforge/textprep.hpp"

namespace sumforge {

SignificantWordSet significant_words(const FrequencyTable& freq,
                                     const StopwordSet& stopwords,
                                     std::size_t f_min) {
    if (f_min < 1) {
        throw Error(errc::invalid_parameter, "f_min must be at least 1");
    }
    SignificantWordSet set;
    set.f_min = f_min;
    for (const auto& [word, count] : freq.counts) {
        if (count >= f_min && !stopwords.contains(word)) set.words.insert(word);
    }
    return set;
}

double luhn_score(const Sentence& sentence, const SignificantWordSet& significant,
                  int gap_limit) {
    if (gap_limit < 0) {
        throw Error(errc::invalid_parameter, "gap_limit must be nonnegative");
    }

    std::vector<long> positions;
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
        if (significant.words.contains(sentence.tokens[i].surface)) {
            positions.push_back(static_cast<long>(i));
        }
    }
    if (positions.empty()) return 0.0;

    // Any scored window starts and ends at significant tokens and bridges at
    // most gap_limit non-significant tokens, so it lives inside one maximal
    // cluster. A sub-window can outscore its cluster (a lone token scores 1,
    // a sparse pair less), so all windows inside the cluster are considered.
    double best = 0.0;
    std::size_t group_start = 0;
    for (std::size_t i = 1; i <= positions.size(); ++i) {
        const bool breaks = i == positions.size() ||
                            positions[i] - positions[i - 1] - 1 > gap_limit;
        if (!breaks) continue;
        for (std::size_t a = group_start; a < i; ++a) {
            for (std::size_t b = a; b < i; ++b) {
                const double n_sig = static_cast<double>(b - a + 1);
                const double span = static_cast<double>(positions[b] - positions[a] + 1);
                best = std::max(best, n_sig * n_sig / span);
            }
        }
        group_start = i;
    }
    return best;
}

Summary summarize_luhn(const Document& document, const StopwordSet& stopwords,
                       int k, const LuhnParams& params) {
    if (k < 1) {
        throw Error(errc::invalid_parameter, "summary budget k must be at least 1");
    }
    if (document.sentences.empty()) {
        throw Error(errc::no_sentences, "document has no sentences: " + document.id);
    }

    // Significance comes from the stopword-filtered document-wide counts.
    std::vector<Token> content;
    for (const Sentence& sentence : document.sentences) {
        content.insert(content.end(), sentence.content_tokens.begin(),
                       sentence.content_tokens.end());
    }
    const FrequencyTable freq = frequency_distribution(content);
    const SignificantWordSet significant = significant_words(freq, stopwords, params.f_min);

    const double n = static_cast<double>(document.sentences.size());
    std::vector<double> scores;
    scores.reserve(document.sentences.size());
    for (const Sentence& sentence : document.sentences) {
        double score = luhn_score(sentence, significant, params.gap_limit);
        if (params.positional_boost) {
            score *= 1.0 / (1.0 + static_cast<double>(sentence.index) / n);
        }
        scores.push_back(score);
    }

    std::vector<int> picked = select_top_k(scores, k);
    std::vector<double> picked_scores;
    picked_scores.reserve(picked.size());
    for (int idx : picked) picked_scores.push_back(scores[idx]);
    return make_summary(Algorithm::luhn, document, std::move(picked),
                        std::move(picked_scores));
}

} // namespace sumforge
