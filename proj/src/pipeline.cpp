#include "sumforge/pipeline.hpp"

#include <vector>

#include "sumforge/error.hpp"

namespace sumforge {

PreparedCorpus prepare_loaded(Document document, const PipelineOptions& options) {
    PreparedCorpus prepared;
    prepare_document(document, options.stopwords, options.split);

    std::vector<Token> all_tokens;
    std::vector<Token> content_tokens;
    for (const Sentence& sentence : document.sentences) {
        all_tokens.insert(all_tokens.end(), sentence.tokens.begin(), sentence.tokens.end());
        content_tokens.insert(content_tokens.end(), sentence.content_tokens.begin(),
                              sentence.content_tokens.end());
    }
    prepared.token_frequencies = frequency_distribution(all_tokens);
    prepared.content_frequencies = frequency_distribution(content_tokens);
    prepared.idf = compute_idf(document.sentences);
    prepared.document = std::move(document);
    return prepared;
}

PreparedCorpus prepare_corpus(const std::filesystem::path& path, bool concat,
                              const PipelineOptions& options) {
    Corpus corpus = load_corpus(path, concat);
    if (corpus.documents.size() != 1) {
        throw Error(errc::invalid_parameter,
                    "corpus has " + std::to_string(corpus.documents.size()) +
                        " documents; concatenate to process as one");
    }
    return prepare_loaded(std::move(corpus.documents.front()), options);
}

} // namespace sumforge
