#include "sumforge/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "sumforge/error.hpp"

namespace sumforge {

namespace {

bool valid_utf8(const std::string& bytes) {
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        const auto b0 = static_cast<unsigned char>(bytes[i]);
        std::size_t len;
        if (b0 < 0x80) {
            i += 1;
            continue;
        } else if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            if (b0 < 0xC2) return false; // overlong
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            if (b0 > 0xF4) return false; // beyond U+10FFFF
        } else {
            return false;
        }
        if (i + len > n) return false;
        for (std::size_t k = 1; k < len; ++k) {
            if ((static_cast<unsigned char>(bytes[i + k]) & 0xC0) != 0x80) return false;
        }
        const auto b1 = static_cast<unsigned char>(bytes[i + 1]);
        if (b0 == 0xE0 && b1 < 0xA0) return false; // overlong 3-byte
        if (b0 == 0xED && b1 > 0x9F) return false; // UTF-16 surrogate
        if (b0 == 0xF0 && b1 < 0x90) return false; // overlong 4-byte
        if (b0 == 0xF4 && b1 > 0x8F) return false; // beyond U+10FFFF
        i += len;
    }
    return true;
}

std::string normalize_newlines(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == '\r') {
            out.push_back('\n');
            if (i + 1 < raw.size() && raw[i + 1] == '\n') ++i;
        } else {
            out.push_back(raw[i]);
        }
    }
    return out;
}

bool only_whitespace(const std::string& text) {
    return std::all_of(text.begin(), text.end(), [](unsigned char c) {
        return std::isspace(c) != 0;
    });
}

std::string read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(errc::not_found, "cannot open file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

} // namespace

Document load_document(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        throw Error(errc::not_found, "no such file: " + path.string());
    }
    std::string bytes = read_file_bytes(path);
    if (!valid_utf8(bytes)) {
        throw Error(errc::not_utf8, "invalid UTF-8 in file: " + path.string());
    }
    std::string text = normalize_newlines(bytes);
    if (only_whitespace(text)) {
        throw Error(errc::empty_file, "file has no non-whitespace content: " + path.string());
    }
    Document doc;
    doc.id = path.stem().string();
    doc.raw_text = std::move(text);
    return doc;
}

Corpus load_corpus(const std::filesystem::path& path, bool concat) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) {
        throw Error(errc::not_found, "no such path: " + path.string());
    }

    std::vector<std::filesystem::path> files;
    if (std::filesystem::is_directory(path, ec)) {
        for (const auto& entry : std::filesystem::directory_iterator(path)) {
            if (entry.is_regular_file() && entry.path().extension() == ".txt") {
                files.push_back(entry.path());
            }
        }
        if (files.empty()) {
            throw Error(errc::no_text_files, "no .txt files in directory: " + path.string());
        }
        std::sort(files.begin(), files.end(),
                  [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
    } else {
        files.push_back(path);
    }

    Corpus corpus;
    std::vector<Document> loaded;
    std::unordered_set<std::string> seen_ids;
    for (const auto& file : files) {
        Document doc = load_document(file);
        if (!seen_ids.insert(doc.id).second) {
            throw Error(errc::invalid_parameter, "duplicate document id: " + doc.id);
        }
        corpus.source_manifest.push_back({file, std::filesystem::file_size(file)});
        loaded.push_back(std::move(doc));
    }

    if (concat && loaded.size() > 1) {
        Document joined;
        joined.id = std::filesystem::is_directory(path, ec) ? path.stem().string()
                                                            : loaded.front().id;
        if (joined.id.empty()) joined.id = "corpus";
        std::string text;
        for (std::size_t i = 0; i < loaded.size(); ++i) {
            if (i > 0) text += kCorpusSeparator;
            text += loaded[i].raw_text;
        }
        joined.raw_text = std::move(text);
        corpus.documents.push_back(std::move(joined));
    } else {
        corpus.documents = std::move(loaded);
    }
    return corpus;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        throw Error(errc::not_found, "no such stopword file: " + path.string());
    }
    std::string bytes = read_file_bytes(path);
    if (!valid_utf8(bytes)) {
        throw Error(errc::not_utf8, "invalid UTF-8 in stopword file: " + path.string());
    }
    StopwordSet words;
    std::istringstream lines(bytes);
    std::string line;
    while (std::getline(lines, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::string word;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            }
        }
        if (!word.empty()) words.insert(std::move(word));
    }
    return words;
}

} // namespace sumforge
