#include "sumforge/lsa.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "sumforge/error.hpp"

namespace sumforge {

TermSentenceMatrix build_term_sentence_matrix(std::span<const Sentence> sentences,
                                              const IdfTable& idf) {
    std::set<std::string> vocabulary;
    for (const Sentence& sentence : sentences) {
        for (const Token& token : sentence.content_tokens) vocabulary.insert(token.surface);
    }
    if (vocabulary.empty()) {
        throw Error(errc::no_sentences, "no sentence has content tokens");
    }

    TermSentenceMatrix tsm;
    tsm.terms.assign(vocabulary.begin(), vocabulary.end());
    std::map<std::string, std::size_t> row_of;
    for (std::size_t r = 0; r < tsm.terms.size(); ++r) row_of[tsm.terms[r]] = r;

    tsm.entries = Matrix(tsm.terms.size(), sentences.size());
    for (std::size_t s = 0; s < sentences.size(); ++s) {
        for (const Token& token : sentences[s].content_tokens) {
            tsm.entries(row_of[token.surface], s) += idf[token.surface];
        }
    }
    return tsm;
}

Summary summarize_lsa(const Document& document, const IdfTable& idf, int k) {
    if (k < 1) {
        throw Error(errc::invalid_parameter, "summary budget k must be at least 1");
    }
    if (document.sentences.empty()) {
        throw Error(errc::no_sentences, "document has no sentences: " + document.id);
    }

    const TermSentenceMatrix tsm = build_term_sentence_matrix(document.sentences, idf);
    const SvdFactors factors = svd(tsm.entries);
    const std::size_t n = tsm.n_sentences();
    const std::size_t topics = factors.singular_values.size();

    std::vector<std::size_t> usable;
    const double floor = 1e-9 * factors.singular_values.front();
    for (std::size_t t = 0; t < topics; ++t) {
        if (factors.singular_values[t] >= floor && factors.singular_values[t] > 0.0) {
            usable.push_back(t);
        }
    }

    std::vector<bool> selectable(n, false);
    std::size_t n_selectable = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (!document.sentences[s].content_tokens.empty()) {
            selectable[s] = true;
            ++n_selectable;
        }
    }

    const std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(k), n_selectable);
    std::vector<int> chosen;
    std::vector<double> weights;
    std::vector<bool> taken(n, false);

    // Cycle the usable topics, strongest first, taking per topic the
    // unselected sentence with the largest |Vt| loading.
    std::size_t cursor = 0;
    while (chosen.size() < want && !usable.empty()) {
        const std::size_t t = usable[cursor % usable.size()];
        ++cursor;
        int best = -1;
        double best_mag = -1.0;
        for (std::size_t s = 0; s < n; ++s) {
            if (taken[s] || !selectable[s]) continue;
            const double mag = std::abs(factors.vt(t, s));
            if (mag > best_mag) {
                best_mag = mag;
                best = static_cast<int>(s);
            }
        }
        if (best < 0) break;
        taken[best] = true;
        chosen.push_back(best);
        weights.push_back(best_mag);
    }
    // Degenerate fallback (no usable topic): earliest sentences win.
    for (std::size_t s = 0; chosen.size() < want && s < n; ++s) {
        if (!taken[s] && selectable[s]) {
            taken[s] = true;
            chosen.push_back(static_cast<int>(s));
            weights.push_back(0.0);
        }
    }

    return make_summary(Algorithm::lsa, document, std::move(chosen), std::move(weights));
}

} // namespace sumforge
