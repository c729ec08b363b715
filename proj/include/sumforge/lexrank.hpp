#pragma once

#include <span>
#include <vector>

#include "sumforge/document.hpp"
#include "sumforge/summary.hpp"
#include "sumforge/termstats.hpp"

namespace sumforge {

/// Symmetric matrix of pairwise idf-modified cosine similarities in [0,1]
/// with unit diagonal.
struct SimilarityMatrix {
    int n = 0;
    std::vector<double> values; // row-major n*n

    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * n + j]; }
    double& at(int i, int j) { return values[static_cast<std::size_t>(i) * n + j]; }
};

struct CentralityScores {
    std::vector<double> scores; // nonnegative, sums to 1
    int iterations = 0;
    bool converged = false;
};

enum class CentralityMode { continuous, threshold };

struct LexRankParams {
    CentralityMode mode = CentralityMode::continuous;
    double threshold = 0.1; // used in threshold mode only
    double damping = 0.15;
    double tol = 1e-6;
    int max_iter = 200;
};

/// Cosine similarity between tf*idf sentence vectors; the idf^2 weighting is
/// already carried by the stored weights. Returns 0 for disjoint supports.
double idf_modified_cosine(const SentenceVector& x, const SentenceVector& y);

/// Pairwise similarities; sentences without content tokens are similar only
/// to themselves.
SimilarityMatrix build_similarity_matrix(std::span<const Sentence> sentences,
                                         const IdfTable& idf);

/// Power iteration p <- damping*u + (1-damping)*B^T p on the row-stochastic
/// recommendation matrix B derived from the similarity matrix. Self
/// similarities are excluded from the walk (a sentence does not recommend
/// itself); rows without any neighbor are replaced by uniform rows. In
/// threshold mode off-diagonal entries are binarized at the threshold first.
/// Non-convergence is reported via converged=false, never thrown.
CentralityScores lexrank_centrality(const SimilarityMatrix& matrix,
                                    const LexRankParams& params = {});

/// The k most central sentences in document order. Sentences without content
/// tokens are never selected.
Summary summarize_lexrank(const Document& document, const IdfTable& idf, int k,
                          const LexRankParams& params = {});

} // namespace sumforge
