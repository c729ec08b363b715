#include "sumforge/textprep.hpp"

#include <algorithm>
#include <cctype>

#include "sumforge/error.hpp"

namespace sumforge {

namespace {

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_terminator(char c) {
    return c == '.' || c == '!' || c == '?';
}

char lower(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

bool iequal(char a, char b) {
    return lower(a) == lower(b);
}

// True if the period at `pos` closes a guarded abbreviation or a
// single-letter initial.
bool guarded_period(const std::string& text, std::size_t pos,
                    const SplitOptions& options) {
    // Single-letter initial: exactly one letter before the period, preceded
    // by a non-letter. Also covers the final period of "e.g." and "i.e.".
    std::size_t run = 0;
    std::size_t k = pos;
    while (k > 0 && std::isalpha(static_cast<unsigned char>(text[k - 1]))) {
        --k;
        ++run;
    }
    if (run == 1) return true;

    for (const auto& abbr : options.guarded_abbreviations) {
        if (abbr.empty() || abbr.back() != '.') continue;
        if (pos + 1 < abbr.size()) continue;
        const std::size_t start = pos + 1 - abbr.size();
        bool match = true;
        for (std::size_t i = 0; i < abbr.size(); ++i) {
            if (!iequal(text[start + i], abbr[i])) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        if (start > 0 && std::isalpha(static_cast<unsigned char>(text[start - 1]))) {
            continue; // "config." must not match the guard "fig."
        }
        return true;
    }
    return false;
}

} // namespace

std::vector<Token> tokenize(const std::string& sentence_text) {
    std::vector<Token> tokens;
    const std::size_t n = sentence_text.size();
    std::size_t i = 0;
    while (i < n) {
        if (!is_word_char(sentence_text[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n) {
            if (is_word_char(sentence_text[j])) {
                ++j;
            } else if ((sentence_text[j] == '-' || sentence_text[j] == '/') &&
                       j + 1 < n && is_word_char(sentence_text[j + 1]) &&
                       is_word_char(sentence_text[j - 1])) {
                ++j; // internal joiner with alphanumeric neighbors
            } else {
                break;
            }
        }
        std::string surface;
        surface.reserve(j - i);
        for (std::size_t k = i; k < j; ++k) surface.push_back(lower(sentence_text[k]));
        tokens.push_back(Token{std::move(surface), static_cast<int>(tokens.size())});
        i = j;
    }
    return tokens;
}

std::vector<Sentence> split_sentences(const Document& document,
                                      const SplitOptions& options) {
    const std::string& text = document.raw_text;
    const std::size_t n = text.size();

    std::vector<Sentence> sentences;
    auto emit = [&](std::size_t begin, std::size_t end) {
        if (begin >= end) return;
        Sentence s;
        s.text = text.substr(begin, end - begin);
        s.span = Span{begin, end};
        s.tokens = tokenize(s.text);
        if (s.tokens.empty()) return; // token-less fragment, dropped
        s.content_tokens = s.tokens;
        s.index = static_cast<int>(sentences.size());
        sentences.push_back(std::move(s));
    };

    std::size_t start = 0;
    while (start < n && is_space(text[start])) ++start;

    std::size_t pos = start;
    while (pos < n) {
        const char c = text[pos];
        if (is_terminator(c) && (pos + 1 == n || is_space(text[pos + 1])) &&
            !(c == '.' && guarded_period(text, pos, options))) {
            emit(start, pos + 1);
            start = pos + 1;
            while (start < n && is_space(text[start])) ++start;
            pos = start;
        } else {
            ++pos;
        }
    }
    if (start < n) {
        // end of text closes the final sentence; trim trailing whitespace
        std::size_t end = n;
        while (end > start && is_space(text[end - 1])) --end;
        emit(start, end);
    }

    if (sentences.empty()) {
        throw Error(errc::no_sentences,
                    "document yields no token-bearing sentences: " + document.id);
    }
    return sentences;
}

std::vector<Token> remove_stopwords(std::span<const Token> tokens,
                                    const StopwordSet& stopwords) {
    std::vector<Token> kept;
    kept.reserve(tokens.size());
    for (const Token& token : tokens) {
        if (!stopwords.contains(token.surface)) kept.push_back(token);
    }
    return kept;
}

FrequencyTable frequency_distribution(std::span<const Token> tokens) {
    FrequencyTable table;
    for (const Token& token : tokens) {
        ++table.counts[token.surface];
    }
    table.total = tokens.size();
    return table;
}

void apply_stopwords(std::vector<Sentence>& sentences, const StopwordSet& stopwords) {
    for (Sentence& sentence : sentences) {
        sentence.content_tokens = remove_stopwords(sentence.tokens, stopwords);
    }
}

void prepare_document(Document& document, const StopwordSet& stopwords,
                      const SplitOptions& options) {
    document.sentences = split_sentences(document, options);
    apply_stopwords(document.sentences, stopwords);
}

} // namespace sumforge
