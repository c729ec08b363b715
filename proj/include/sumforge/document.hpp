#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace sumforge {

/// A normalized lowercase word form plus its index in the owning sentence's
/// token list. Surfaces never contain whitespace and always carry at least
/// one letter or digit.
struct Token {
    std::string surface;
    int position = 0;

    friend bool operator==(const Token&, const Token&) = default;
};

/// Half-open byte range [begin, end) into Document::raw_text.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const Span&, const Span&) = default;
};

struct Sentence {
    int index = 0;            // position among the document's retained sentences
    std::string text;         // exact slice raw_text[span.begin, span.end)
    Span span;
    std::vector<Token> tokens;          // all word tokens, in order
    std::vector<Token> content_tokens;  // tokens with stopwords filtered out
};

struct Document {
    std::string id;
    std::string raw_text;
    std::vector<Sentence> sentences; // filled by prepare_document()
};

struct ManifestEntry {
    std::filesystem::path path;
    std::uintmax_t bytes = 0;
};

struct Corpus {
    std::vector<Document> documents;
    std::vector<ManifestEntry> source_manifest;
};

/// Exact multiset counts of token surfaces.
struct FrequencyTable {
    std::map<std::string, std::size_t> counts;
    std::size_t total = 0;
};

} // namespace sumforge
