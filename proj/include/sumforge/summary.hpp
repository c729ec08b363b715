#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumforge/document.hpp"

namespace sumforge {

enum class Algorithm { lexrank, lsa, luhn, klsum };

std::string_view algorithm_name(Algorithm algorithm) noexcept;

/// An ordered selection of verbatim source sentences. text is exactly the
/// selected sentences joined by single spaces, in document order.
struct Summary {
    Algorithm algorithm = Algorithm::lexrank;
    std::vector<int> sentence_indices; // strictly increasing
    std::string text;
    std::vector<double> scores; // aligned with sentence_indices; may be empty
};

/// Indices of the k largest scores, ties broken toward the lower index,
/// returned sorted ascending. k is clamped to the number of scores.
std::vector<int> select_top_k(std::span<const double> scores, int k);

/// Assembles a Summary from (possibly unsorted) selected indices; scores, if
/// given, must be aligned with indices before sorting.
Summary make_summary(Algorithm algorithm, const Document& document,
                     std::vector<int> indices, std::vector<double> scores = {});

} // namespace sumforge
