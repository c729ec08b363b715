#include <doctest.h>

#include <filesystem>
#include <functional>
#include <set>

#include "sumforge/corpus.hpp"
#include "sumforge/error.hpp"
#include "test_helpers.hpp"

using namespace sumforge;
using helpers::TempDir;

namespace {

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return errc::not_found;
}

} // namespace

TEST_CASE("load_document reads a file verbatim") {
    TempDir tmp;
    const auto file = tmp.write("a.txt", "Friction stir welding.\n");
    const Document doc = load_document(file);
    CHECK(doc.id == "a");
    CHECK(doc.raw_text == "Friction stir welding.\n");
}

TEST_CASE("load_document normalizes CRLF and CR to LF") {
    TempDir tmp;
    const auto file = tmp.write("crlf.txt", "one\r\ntwo\rthree\n");
    const Document doc = load_document(file);
    CHECK(doc.raw_text == "one\ntwo\nthree\n");
    CHECK(doc.raw_text.find('\r') == std::string::npos);
}

TEST_CASE("load_document error paths") {
    TempDir tmp;
    CHECK(code_of([&] { load_document(tmp.path / "missing.txt"); }) == errc::not_found);

    const auto spaces = tmp.write("spaces.txt", "   \n\t  \n");
    CHECK(code_of([&] { load_document(spaces); }) == errc::empty_file);

    const auto empty = tmp.write("empty.txt", "");
    CHECK(code_of([&] { load_document(empty); }) == errc::empty_file);

    const auto bad = tmp.write("bad.txt", std::string("ok\xFF\xFEoops"));
    CHECK(code_of([&] { load_document(bad); }) == errc::not_utf8);

    // overlong encoding of '/'
    const auto overlong = tmp.write("overlong.txt", std::string("x\xC0\xAFy"));
    CHECK(code_of([&] { load_document(overlong); }) == errc::not_utf8);
}

TEST_CASE("load_corpus returns files in filename order") {
    TempDir tmp;
    tmp.write("b.txt", "Second file.\n");
    tmp.write("a.txt", "First file.\n");
    tmp.write("c.txt", "Third file.\n");
    tmp.write("ignored.md", "not text\n");

    const Corpus corpus = load_corpus(tmp.path, false);
    REQUIRE(corpus.documents.size() == 3);
    CHECK(corpus.documents[0].id == "a");
    CHECK(corpus.documents[1].id == "b");
    CHECK(corpus.documents[2].id == "c");
    REQUIRE(corpus.source_manifest.size() == 3);
    CHECK(corpus.source_manifest[0].bytes == 12);
}

TEST_CASE("load_corpus error paths") {
    TempDir tmp;
    CHECK(code_of([&] { load_corpus(tmp.path / "nowhere", false); }) == errc::not_found);
    CHECK(code_of([&] { load_corpus(tmp.path, false); }) == errc::no_text_files);
    tmp.write("readme.md", "only markdown\n");
    CHECK(code_of([&] { load_corpus(tmp.path, false); }) == errc::no_text_files);
}

TEST_CASE("concat joins files with one blank line") {
    TempDir tmp;
    tmp.write("a.txt", "Alpha weld.\n");
    tmp.write("b.txt", "Beta weld.");
    tmp.write("c.txt", "Gamma weld.\n");

    const Corpus corpus = load_corpus(tmp.path, true);
    REQUIRE(corpus.documents.size() == 1);
    const std::string& text = corpus.documents[0].raw_text;
    CHECK(text == "Alpha weld.\n\n\nBeta weld.\n\nGamma weld.\n");

    // exact length bookkeeping: sum of file texts plus separators
    const std::size_t expected =
        12 + 10 + 12 + 2 * std::string(kCorpusSeparator).size();
    CHECK(text.size() == expected);
}

TEST_CASE("loading the same directory twice is deterministic") {
    TempDir tmp;
    tmp.write("x.txt", "One sentence here.\n");
    tmp.write("y.txt", "Another sentence there.\n");

    const Corpus first = load_corpus(tmp.path, true);
    const Corpus second = load_corpus(tmp.path, true);
    REQUIRE(first.documents.size() == second.documents.size());
    CHECK(first.documents[0].raw_text == second.documents[0].raw_text);
    CHECK(first.documents[0].id == second.documents[0].id);
    REQUIRE(first.source_manifest.size() == second.source_manifest.size());
    for (std::size_t i = 0; i < first.source_manifest.size(); ++i) {
        CHECK(first.source_manifest[i].path == second.source_manifest[i].path);
        CHECK(first.source_manifest[i].bytes == second.source_manifest[i].bytes);
    }
}

TEST_CASE("bundled corpus loads as one concatenated document") {
    const Corpus corpus = load_corpus(helpers::data_dir() / "corpus", true);
    REQUIRE(corpus.documents.size() == 1);
    CHECK(corpus.source_manifest.size() == 20);

    // document ids unique when loaded per-file
    const Corpus split = load_corpus(helpers::data_dir() / "corpus", false);
    CHECK(split.documents.size() == 20);
    std::set<std::string> ids;
    for (const auto& doc : split.documents) ids.insert(doc.id);
    CHECK(ids.size() == 20);
}

TEST_CASE("load_stopwords parses comments and case") {
    TempDir tmp;
    const auto file = tmp.write("stop.txt",
                                "# comment line\n"
                                "the\n"
                                "OF  # trailing comment\n"
                                "\n"
                                "  and  \n");
    const StopwordSet words = load_stopwords(file);
    CHECK(words.size() == 3);
    CHECK(words.contains("the"));
    CHECK(words.contains("of"));
    CHECK(words.contains("and"));

    CHECK(code_of([&] { load_stopwords(tmp.path / "missing.txt"); }) == errc::not_found);
}

TEST_CASE("bundled stopword file matches the builtin list") {
    const StopwordSet from_file = load_stopwords(helpers::data_dir() / "stopwords/english.txt");
    CHECK(from_file == default_stopwords());
}
