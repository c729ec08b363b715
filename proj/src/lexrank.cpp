#include "sumforge/lexrank.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sumforge/error.hpp"

namespace sumforge {

double idf_modified_cosine(const SentenceVector& x, const SentenceVector& y) {
    if (x.weights.empty() || y.weights.empty()) {
        throw Error(errc::empty_vector, "cosine of an empty sentence vector");
    }
    double dot = 0.0;
    auto ix = x.weights.begin();
    auto iy = y.weights.begin();
    while (ix != x.weights.end() && iy != y.weights.end()) {
        if (ix->first < iy->first) {
            ++ix;
        } else if (iy->first < ix->first) {
            ++iy;
        } else {
            dot += ix->second * iy->second;
            ++ix;
            ++iy;
        }
    }
    if (dot == 0.0) return 0.0;
    return std::clamp(dot / (x.norm * y.norm), 0.0, 1.0);
}

SimilarityMatrix build_similarity_matrix(std::span<const Sentence> sentences,
                                         const IdfTable& idf) {
    const int n = static_cast<int>(sentences.size());
    std::vector<SentenceVector> vectors(sentences.size());
    bool any_content = false;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        if (!sentences[i].content_tokens.empty()) {
            vectors[i] = sentence_vector(sentences[i], idf);
            any_content = true;
        }
    }
    if (!any_content) {
        throw Error(errc::no_sentences, "no sentence has content tokens");
    }

    SimilarityMatrix matrix;
    matrix.n = n;
    matrix.values.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        matrix.at(i, i) = 1.0;
        for (int j = i + 1; j < n; ++j) {
            double value = 0.0;
            if (!vectors[i].weights.empty() && !vectors[j].weights.empty()) {
                value = idf_modified_cosine(vectors[i], vectors[j]);
            }
            matrix.at(i, j) = value;
            matrix.at(j, i) = value; // mirrored, so symmetry is exact
        }
    }
    return matrix;
}

CentralityScores lexrank_centrality(const SimilarityMatrix& matrix,
                                    const LexRankParams& params) {
    const int n = matrix.n;
    if (n < 1) {
        throw Error(errc::invalid_parameter, "similarity matrix is empty");
    }
    if (params.damping < 0.0 || params.damping >= 1.0) {
        throw Error(errc::invalid_parameter, "damping must be in [0, 1)");
    }
    if (!(params.tol > 0.0)) {
        throw Error(errc::invalid_parameter, "tolerance must be positive");
    }
    if (params.max_iter < 1) {
        throw Error(errc::invalid_parameter, "max_iter must be at least 1");
    }
    if (params.mode == CentralityMode::threshold &&
        (params.threshold < 0.0 || params.threshold >= 1.0)) {
        throw Error(errc::invalid_parameter, "threshold must be in [0, 1)");
    }

    // Row-stochastic recommendation matrix. Self-similarity is excluded from
    // the walk; a sentence with no neighbors becomes a dangling node and is
    // given a uniform row.
    const std::size_t nn = static_cast<std::size_t>(n);
    std::vector<double> b(nn * nn, 0.0);
    const double uniform = 1.0 / static_cast<double>(n);
    for (int i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            double value = matrix.at(i, j);
            if (params.mode == CentralityMode::threshold) {
                value = value >= params.threshold ? 1.0 : 0.0;
            }
            b[static_cast<std::size_t>(i) * nn + j] = value;
            row_sum += value;
        }
        if (row_sum == 0.0) {
            for (int j = 0; j < n; ++j) b[static_cast<std::size_t>(i) * nn + j] = uniform;
        } else {
            for (int j = 0; j < n; ++j) b[static_cast<std::size_t>(i) * nn + j] /= row_sum;
        }
    }

    CentralityScores result;
    std::vector<double> p(nn, uniform);
    std::vector<double> next(nn, 0.0);
    const double teleport = params.damping * uniform;

    int iterations = 0;
    bool converged = false;
    while (iterations < params.max_iter) {
        ++iterations;
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) {
                acc += b[static_cast<std::size_t>(j) * nn + i] * p[j];
            }
            next[i] = teleport + (1.0 - params.damping) * acc;
        }
        double delta = 0.0;
        for (int i = 0; i < n; ++i) delta = std::max(delta, std::abs(next[i] - p[i]));
        p.swap(next);
        if (delta < params.tol) {
            converged = true;
            break;
        }
    }

    double sum = 0.0;
    for (double v : p) sum += v;
    for (double& v : p) v /= sum;

    result.scores = std::move(p);
    result.iterations = iterations;
    result.converged = converged;
    return result;
}

Summary summarize_lexrank(const Document& document, const IdfTable& idf, int k,
                          const LexRankParams& params) {
    if (k < 1) {
        throw Error(errc::invalid_parameter, "summary budget k must be at least 1");
    }
    if (document.sentences.empty()) {
        throw Error(errc::no_sentences, "document has no sentences: " + document.id);
    }
    const SimilarityMatrix matrix = build_similarity_matrix(document.sentences, idf);
    const CentralityScores centrality = lexrank_centrality(matrix, params);

    // Sentences without content tokens keep their teleport mass but are not
    // eligible for selection.
    std::vector<int> eligible;
    for (const Sentence& sentence : document.sentences) {
        if (!sentence.content_tokens.empty()) eligible.push_back(sentence.index);
    }
    std::sort(eligible.begin(), eligible.end(), [&](int a, int b) {
        const double sa = centrality.scores[a];
        const double sb = centrality.scores[b];
        if (sa != sb) return sa > sb;
        return a < b;
    });
    if (static_cast<int>(eligible.size()) > k) eligible.resize(k);

    std::vector<double> scores;
    scores.reserve(eligible.size());
    for (int idx : eligible) scores.push_back(centrality.scores[idx]);
    return make_summary(Algorithm::lexrank, document, std::move(eligible), std::move(scores));
}

} // namespace sumforge
