#pragma once

#include <filesystem>
#include <string>
#include <unordered_set>

#include "sumforge/document.hpp"

namespace sumforge {

using StopwordSet = std::unordered_set<std::string>;

/// Reads one UTF-8 text file into a Document. Line endings are normalized to
/// a single '\n'; the document id is the file stem. Invalid UTF-8 is an
/// error, never silently replaced.
Document load_document(const std::filesystem::path& path);

/// Loads a directory of .txt files (sorted by filename) or a single file.
/// With concat=true all files are joined into one Document, separated by one
/// blank line, mirroring a corpus kept as a single text file.
Corpus load_corpus(const std::filesystem::path& path, bool concat);

/// Separator inserted between files when concatenating a corpus.
inline constexpr const char* kCorpusSeparator = "\n\n";

/// Parses a stopword file: one lowercase word per line, '#' starts a comment.
StopwordSet load_stopwords(const std::filesystem::path& path);

/// The compiled-in English stopword list (identical to the bundled
/// data/stopwords/english.txt).
const StopwordSet& default_stopwords();

} // namespace sumforge
