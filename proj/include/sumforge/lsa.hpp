#pragma once

#include <span>
#include <string>
#include <vector>

#include "sumforge/document.hpp"
#include "sumforge/linalg.hpp"
#include "sumforge/summary.hpp"
#include "sumforge/termstats.hpp"

namespace sumforge {

/// Term-by-sentence matrix of tf*idf weights. Rows are the sorted content
/// vocabulary; a row exists only if the term occurs somewhere.
struct TermSentenceMatrix {
    std::vector<std::string> terms;
    Matrix entries; // terms.size() x n_sentences

    std::size_t n_sentences() const noexcept { return entries.cols(); }
};

/// Thin singular value decomposition A = U * diag(S) * Vt with r = min(m,n).
/// Singular values are nonnegative and non-increasing; U columns and Vt rows
/// are orthonormal. Sign convention: in every row of Vt the entry of largest
/// magnitude (lowest index on ties) is nonnegative.
struct SvdFactors {
    Matrix u;                           // m x r
    std::vector<double> singular_values; // r
    Matrix vt;                          // r x n
};

TermSentenceMatrix build_term_sentence_matrix(std::span<const Sentence> sentences,
                                              const IdfTable& idf);

/// One-sided Jacobi SVD (with QR preconditioning for tall matrices).
/// Deterministic; throws errc::numerical_failure only if the sweep limit is
/// exhausted.
SvdFactors svd(const Matrix& a);

/// Topic-wise selection: walk topics in order of decreasing singular value,
/// skipping topics below 1e-9 * S[0], and per topic take the unselected
/// sentence with the largest |Vt| entry; topics are cycled if k exceeds the
/// usable topic count.
Summary summarize_lsa(const Document& document, const IdfTable& idf, int k);

} // namespace sumforge
