#include "sumforge/termstats.hpp"

#include <cmath>
#include <set>

#include "sumforge/error.hpp"

namespace sumforge {

IdfTable::IdfTable(std::map<std::string, double> values, std::size_t n_units)
    : values_(std::move(values)), n_units_(n_units) {
    // Fallback for an empty table: the smoothed value a df=0 word would get.
    max_idf_ = std::log(static_cast<double>(n_units_) + 1.0) + 1.0;
    if (!values_.empty()) {
        max_idf_ = 0.0;
        for (const auto& [word, value] : values_) {
            if (!(value > 0.0) || !std::isfinite(value)) {
                throw Error(errc::invalid_parameter,
                            "idf value must be positive and finite: " + word);
            }
            max_idf_ = std::max(max_idf_, value);
        }
    }
}

double IdfTable::operator[](const std::string& word) const {
    auto it = values_.find(word);
    return it != values_.end() ? it->second : max_idf_;
}

IdfTable compute_idf(std::span<const Sentence> sentences) {
    if (sentences.empty()) {
        throw Error(errc::empty_input, "compute_idf needs at least one sentence");
    }
    std::map<std::string, std::size_t> df;
    for (const Sentence& sentence : sentences) {
        std::set<std::string> distinct;
        for (const Token& token : sentence.content_tokens) distinct.insert(token.surface);
        for (const auto& word : distinct) ++df[word];
    }
    const double n = static_cast<double>(sentences.size());
    std::map<std::string, double> values;
    for (const auto& [word, count] : df) {
        values[word] = std::log((n + 1.0) / (static_cast<double>(count) + 1.0)) + 1.0;
    }
    return IdfTable(std::move(values), sentences.size());
}

SentenceVector sentence_vector(const Sentence& sentence, const IdfTable& idf) {
    if (sentence.content_tokens.empty()) {
        throw Error(errc::empty_sentence,
                    "sentence has no content tokens: index " + std::to_string(sentence.index));
    }
    std::map<std::string, std::size_t> counts;
    for (const Token& token : sentence.content_tokens) ++counts[token.surface];

    SentenceVector vec;
    double norm2 = 0.0;
    for (const auto& [word, count] : counts) {
        const double w = static_cast<double>(count) * idf[word];
        vec.weights[word] = w;
        norm2 += w * w;
    }
    vec.norm = std::sqrt(norm2);
    return vec;
}

UnigramDistribution unigram_distribution(std::span<const Token> tokens,
                                         double smoothing_epsilon,
                                         const std::set<std::string>& vocabulary) {
    if (vocabulary.empty()) {
        throw Error(errc::empty_vocabulary, "unigram distribution needs a vocabulary");
    }
    if (smoothing_epsilon < 0.0) {
        throw Error(errc::invalid_parameter, "smoothing epsilon must be nonnegative");
    }
    std::map<std::string, std::size_t> counts;
    std::size_t total = 0;
    for (const Token& token : tokens) {
        if (vocabulary.contains(token.surface)) {
            ++counts[token.surface];
            ++total;
        }
    }
    const double denom = static_cast<double>(total) +
                         smoothing_epsilon * static_cast<double>(vocabulary.size());
    if (denom <= 0.0) {
        throw Error(errc::empty_input, "distribution has no probability mass");
    }
    UnigramDistribution dist;
    for (const auto& word : vocabulary) {
        auto it = counts.find(word);
        const double count = it != counts.end() ? static_cast<double>(it->second) : 0.0;
        const double p = (count + smoothing_epsilon) / denom;
        if (p > 0.0) dist.probs[word] = p;
    }
    return dist;
}

NGramMultiset ngram_multiset(std::span<const std::vector<Token>> token_sequences, int n) {
    if (n < 1) {
        throw Error(errc::invalid_order, "n-gram order must be at least 1");
    }
    NGramMultiset grams;
    grams.n = n;
    for (const auto& sequence : token_sequences) {
        if (sequence.size() < static_cast<std::size_t>(n)) continue;
        for (std::size_t i = 0; i + n <= sequence.size(); ++i) {
            std::string key = sequence[i].surface;
            for (std::size_t k = 1; k < static_cast<std::size_t>(n); ++k) {
                key += ' ';
                key += sequence[i + k].surface;
            }
            ++grams.counts[key];
            ++grams.total;
        }
    }
    return grams;
}

} // namespace sumforge
