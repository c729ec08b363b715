#pragma once

#include <filesystem>

#include "sumforge/corpus.hpp"
#include "sumforge/document.hpp"
#include "sumforge/termstats.hpp"
#include "sumforge/textprep.hpp"

namespace sumforge {

struct PipelineOptions {
    SplitOptions split;
    StopwordSet stopwords = default_stopwords();
};

/// Everything the summarizers and reports need for one document.
struct PreparedCorpus {
    Document document;
    FrequencyTable token_frequencies;   // all tokens, stopwords included
    FrequencyTable content_frequencies; // stopwords removed
    IdfTable idf;
};

/// Loads path (file or directory, concatenated into one document when
/// requested), splits, tokenizes, filters and derives the shared statistics.
/// A multi-document corpus without concat is rejected: the pipeline operates
/// on a single document.
PreparedCorpus prepare_corpus(const std::filesystem::path& path, bool concat,
                              const PipelineOptions& options = {});

/// Same derivations for an already-loaded document.
PreparedCorpus prepare_loaded(Document document, const PipelineOptions& options = {});

} // namespace sumforge
