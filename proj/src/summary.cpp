#include "sumforge/summary.hpp"

#include <algorithm>
#include <numeric>

#include "sumforge/error.hpp"

namespace sumforge {

std::string_view algorithm_name(Algorithm algorithm) noexcept {
    switch (algorithm) {
    case Algorithm::lexrank: return "lexrank";
    case Algorithm::lsa: return "lsa";
    case Algorithm::luhn: return "luhn";
    case Algorithm::klsum: return "klsum";
    }
    return "unknown";
}

std::vector<int> select_top_k(std::span<const double> scores, int k) {
    if (scores.empty()) {
        throw Error(errc::empty_scores, "no scores to select from");
    }
    if (k < 1) {
        throw Error(errc::invalid_parameter, "k must be at least 1");
    }
    std::vector<int> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });
    if (static_cast<std::size_t>(k) < order.size()) order.resize(k);
    std::sort(order.begin(), order.end());
    return order;
}

Summary make_summary(Algorithm algorithm, const Document& document,
                     std::vector<int> indices, std::vector<double> scores) {
    if (!scores.empty() && scores.size() != indices.size()) {
        throw Error(errc::invalid_parameter, "scores not aligned with indices");
    }

    std::vector<std::size_t> order(indices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return indices[a] < indices[b]; });

    Summary summary;
    summary.algorithm = algorithm;
    summary.sentence_indices.reserve(indices.size());
    summary.scores.reserve(scores.size());
    for (std::size_t pos : order) {
        const int idx = indices[pos];
        if (idx < 0 || static_cast<std::size_t>(idx) >= document.sentences.size()) {
            throw Error(errc::invalid_parameter, "sentence index out of range");
        }
        if (!summary.text.empty()) summary.text += ' ';
        summary.text += document.sentences[idx].text;
        summary.sentence_indices.push_back(idx);
        if (!scores.empty()) summary.scores.push_back(scores[pos]);
    }
    return summary;
}

} // namespace sumforge
