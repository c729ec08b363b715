#pragma once

#include <span>
#include <string>
#include <vector>

#include "sumforge/corpus.hpp"
#include "sumforge/document.hpp"

namespace sumforge {

struct SplitOptions {
    /// Abbreviations whose trailing period never ends a sentence. Matched
    /// case-insensitively at a word boundary. Single-letter initials
    /// ("J. Smith") are always guarded.
    std::vector<std::string> guarded_abbreviations = {"et al.", "e.g.", "i.e.",
                                                      "fig.", "eq."};
};

/// Splits raw text into sentences. A boundary is '.', '!' or '?' followed by
/// whitespace or end of text, unless the period closes a guarded
/// abbreviation. Terminators embedded between non-whitespace characters
/// ("1?000") never split. Fragments without any word token are dropped;
/// surviving sentences are indexed 0..n-1 in document order with tokens
/// filled in (content_tokens left equal to tokens until stopwords are
/// applied).
std::vector<Sentence> split_sentences(const Document& document,
                                      const SplitOptions& options = {});

/// Lowercase word tokens: maximal runs of letters and digits, joined across
/// '-' or '/' when both neighbors are alphanumeric ("2219-T6" -> "2219-t6",
/// "r/min" -> "r/min"). Everything else is discarded, which is the pipeline's
/// punctuation-removal step.
std::vector<Token> tokenize(const std::string& sentence_text);

/// Order-preserving filter; a token survives iff its surface is not in the
/// stopword set.
std::vector<Token> remove_stopwords(std::span<const Token> tokens,
                                    const StopwordSet& stopwords);

FrequencyTable frequency_distribution(std::span<const Token> tokens);

/// Fills sentence.content_tokens for every sentence.
void apply_stopwords(std::vector<Sentence>& sentences,
                     const StopwordSet& stopwords);

/// split_sentences + apply_stopwords, writing into document.sentences.
void prepare_document(Document& document, const StopwordSet& stopwords,
                      const SplitOptions& options = {});

} // namespace sumforge
