#pragma once

#include <cstddef>
#include <optional>

#include "sumforge/document.hpp"
#include "sumforge/summary.hpp"
#include "sumforge/termstats.hpp"

namespace sumforge {

struct KlConfig {
    std::size_t word_budget = 250; // max content tokens in the summary
    double epsilon = 1e-6;         // smoothing for both distributions
};

/// KL(P || Q) = sum_w P(w) * ln(P(w)/Q(w)). Both distributions must share the
/// same support; exactly 0 when P == Q.
double kl_divergence(const UnigramDistribution& p, const UnigramDistribution& q);

/// Greedy growth: starting from the smoothed-uniform empty summary, repeatedly
/// add the sentence minimizing KL(document || summary), accepting only strict
/// reductions; sentences that would exceed the word budget are skipped and the
/// search continues with shorter ones. Stops at the optional sentence cap.
Summary summarize_klsum(const Document& document, const KlConfig& config = {},
                        std::optional<int> sentence_cap = std::nullopt);

} // namespace sumforge
