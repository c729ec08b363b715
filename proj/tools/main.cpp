// sumforge: summarize a corpus of abstracts four ways, report token
// frequencies and score summaries with clipped n-gram overlap.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumforge/error.hpp"
#include "sumforge/klsum.hpp"
#include "sumforge/lexrank.hpp"
#include "sumforge/lsa.hpp"
#include "sumforge/luhn.hpp"
#include "sumforge/pipeline.hpp"
#include "sumforge/rouge.hpp"
#include "sumforge/summary.hpp"

namespace {

using nlohmann::json;
using namespace sumforge;

constexpr const char* kStopwordEnvVar = "SUMFORGE_STOPWORDS";

std::string format_metric(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return buffer;
}

const char* category_label(error_category category) {
    switch (category) {
    case error_category::config: return "config";
    case error_category::io: return "io";
    case error_category::degenerate_input: return "degenerate";
    case error_category::internal: return "internal";
    }
    return "internal";
}

int exit_code_for(const Error& error) {
    switch (error.category()) {
    case error_category::config: return 2;
    case error_category::io: return 3;
    case error_category::degenerate_input: return 4;
    case error_category::internal: return 1;
    }
    return 1;
}

/// Flag beats the environment variable; the compiled-in list is the default.
StopwordSet resolve_stopwords(const std::string& flag_path, std::string& provenance) {
    if (!flag_path.empty()) {
        provenance = flag_path;
        return load_stopwords(flag_path);
    }
    if (const char* env = std::getenv(kStopwordEnvVar); env != nullptr && *env != '\0') {
        provenance = env;
        return load_stopwords(env);
    }
    provenance = "builtin";
    return default_stopwords();
}

struct AlgorithmParams {
    LexRankParams lexrank;
    LuhnParams luhn;
    KlConfig klsum;
    std::string lexrank_mode = "continuous";

    void finalize() {
        lexrank.mode = lexrank_mode == "threshold" ? CentralityMode::threshold
                                                   : CentralityMode::continuous;
    }

    json to_json(Algorithm algorithm) const {
        json params;
        switch (algorithm) {
        case Algorithm::lexrank:
            params["damping"] = lexrank.damping;
            params["threshold"] = lexrank.threshold;
            params["mode"] = lexrank_mode;
            params["tol"] = lexrank.tol;
            params["max_iter"] = lexrank.max_iter;
            break;
        case Algorithm::lsa:
            break;
        case Algorithm::luhn:
            params["f_min"] = luhn.f_min;
            params["gap_limit"] = luhn.gap_limit;
            params["positional_boost"] = luhn.positional_boost;
            break;
        case Algorithm::klsum:
            params["L"] = klsum.word_budget;
            params["epsilon"] = klsum.epsilon;
            break;
        }
        return params;
    }
};

Summary run_algorithm(Algorithm algorithm, const PreparedCorpus& prepared, int k,
                      const AlgorithmParams& params, const StopwordSet& stopwords) {
    switch (algorithm) {
    case Algorithm::lexrank:
        return summarize_lexrank(prepared.document, prepared.idf, k, params.lexrank);
    case Algorithm::lsa:
        return summarize_lsa(prepared.document, prepared.idf, k);
    case Algorithm::luhn:
        return summarize_luhn(prepared.document, stopwords, k, params.luhn);
    case Algorithm::klsum:
        return summarize_klsum(prepared.document, params.klsum, k);
    }
    throw Error(errc::invalid_parameter, "unknown algorithm");
}

void print_summary(const Summary& summary, const Document& document, int k,
                   const std::string& format, json params) {
    if (format == "json") {
        json out;
        out["algorithm"] = std::string(algorithm_name(summary.algorithm));
        out["k"] = k;
        out["indices"] = summary.sentence_indices;
        out["text"] = summary.text;
        out["params"] = std::move(params);
        std::cout << out.dump(2) << "\n";
    } else if (format == "tsv") {
        std::cout << "index\tscore\ttext\n";
        for (std::size_t i = 0; i < summary.sentence_indices.size(); ++i) {
            const int idx = summary.sentence_indices[i];
            std::cout << idx << '\t';
            if (i < summary.scores.size()) std::cout << format_metric(summary.scores[i]);
            std::cout << '\t';
            // sentence text may contain embedded newlines from the source;
            // flatten them so each row stays one line
            std::string text = document.sentences[idx].text;
            for (char& c : text) {
                if (c == '\n' || c == '\t') c = ' ';
            }
            std::cout << text << '\n';
        }
    } else {
        std::cout << summary.text << "\n";
    }
}

void print_rouge(const RougeScore& score, const std::string& format) {
    if (format == "json") {
        json out;
        out["n"] = score.n;
        out["recall"] = score.recall;
        out["precision"] = score.precision;
        out["f1"] = score.f1;
        out["overlap"] = score.overlap;
        out["model_total"] = score.model_total;
        out["reference_total"] = score.reference_total;
        std::cout << out.dump(2) << "\n";
    } else if (format == "tsv") {
        std::cout << "n\trecall\tprecision\tf1\toverlap\tmodel_total\treference_total\n";
        std::cout << score.n << '\t' << format_metric(score.recall) << '\t'
                  << format_metric(score.precision) << '\t' << format_metric(score.f1)
                  << '\t' << score.overlap << '\t' << score.model_total << '\t'
                  << score.reference_total << '\n';
    } else {
        std::cout << "n: " << score.n << "\n"
                  << "recall: " << format_metric(score.recall) << "\n"
                  << "precision: " << format_metric(score.precision) << "\n"
                  << "f1: " << format_metric(score.f1) << "\n"
                  << "overlap: " << score.overlap << "\n"
                  << "model_total: " << score.model_total << "\n"
                  << "reference_total: " << score.reference_total << "\n";
    }
}

int run_summarize(const std::string& input, bool concat, const std::string& algo,
                  int k, const std::string& stopword_path, const std::string& format,
                  AlgorithmParams params) {
    params.finalize();
    std::string provenance;
    PipelineOptions options;
    options.stopwords = resolve_stopwords(stopword_path, provenance);

    const std::map<std::string, Algorithm> algorithms = {
        {"lexrank", Algorithm::lexrank},
        {"lsa", Algorithm::lsa},
        {"luhn", Algorithm::luhn},
        {"klsum", Algorithm::klsum},
    };
    const Algorithm algorithm = algorithms.at(algo);

    const PreparedCorpus prepared = prepare_corpus(input, concat, options);
    const Summary summary = run_algorithm(algorithm, prepared, k, params, options.stopwords);

    json jparams = params.to_json(algorithm);
    jparams["k"] = k;
    jparams["stopwords"] = provenance;
    print_summary(summary, prepared.document, k, format, std::move(jparams));
    return 0;
}

int run_evaluate(const std::string& candidate, const std::string& reference, int n,
                 bool filter_stopwords, const std::string& stopword_path,
                 const std::string& format) {
    std::string provenance;
    EvalOptions options;
    options.filter_stopwords = filter_stopwords;
    options.stopwords = resolve_stopwords(stopword_path, provenance);

    const Document cand = load_document(candidate);
    const Document ref = load_document(reference);
    const RougeScore score = evaluate_text(cand.raw_text, ref.raw_text, n, options);
    print_rouge(score, format);
    return 0;
}

int run_freq(const std::string& input, bool concat, int top, bool filtered,
             const std::string& stopword_path, const std::string& format) {
    if (top < 1) {
        throw Error(errc::invalid_parameter, "top must be at least 1");
    }
    std::string provenance;
    PipelineOptions options;
    options.stopwords = resolve_stopwords(stopword_path, provenance);
    const PreparedCorpus prepared = prepare_corpus(input, concat, options);
    const FrequencyTable& table =
        filtered ? prepared.content_frequencies : prepared.token_frequencies;

    // Descending count, then ascending word.
    std::vector<std::pair<std::string, std::size_t>> rows(table.counts.begin(),
                                                          table.counts.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (rows.size() > static_cast<std::size_t>(top)) rows.resize(top);

    if (format == "json") {
        json out;
        out["filtered"] = filtered;
        out["top"] = top;
        json jrows = json::array();
        for (const auto& [word, count] : rows) {
            jrows.push_back({{"word", word}, {"count", count}});
        }
        out["rows"] = std::move(jrows);
        out["params"] = {{"stopwords", provenance}};
        std::cout << out.dump(2) << "\n";
    } else if (format == "tsv") {
        std::cout << "word\tcount\n";
        for (const auto& [word, count] : rows) {
            std::cout << word << '\t' << count << '\n';
        }
    } else {
        for (const auto& [word, count] : rows) {
            std::printf("%8zu  %s\n", count, word.c_str());
        }
    }
    return 0;
}

int run_bench(const std::string& input, bool concat, const std::string& reference,
              int k, int n, const std::string& stopword_path, const std::string& format,
              AlgorithmParams params) {
    params.finalize();
    std::string provenance;
    PipelineOptions options;
    options.stopwords = resolve_stopwords(stopword_path, provenance);

    const PreparedCorpus prepared = prepare_corpus(input, concat, options);
    const Document ref = load_document(reference);

    const Algorithm order[] = {Algorithm::lexrank, Algorithm::lsa, Algorithm::luhn,
                               Algorithm::klsum};
    struct Row {
        std::string algorithm;
        RougeScore score;
    };
    std::vector<Row> rows;
    for (Algorithm algorithm : order) {
        const Summary summary =
            run_algorithm(algorithm, prepared, k, params, options.stopwords);
        const RougeScore score = evaluate_summary(summary, ref.raw_text, n);
        rows.push_back({std::string(algorithm_name(algorithm)), score});
    }

    if (format == "json") {
        json out;
        json jrows = json::array();
        for (const Row& row : rows) {
            jrows.push_back({{"algorithm", row.algorithm},
                             {"recall", row.score.recall},
                             {"precision", row.score.precision},
                             {"f1", row.score.f1}});
        }
        out["rows"] = std::move(jrows);
        out["params"] = {{"k", k},
                         {"n", n},
                         {"damping", params.lexrank.damping},
                         {"threshold", params.lexrank.threshold},
                         {"mode", params.lexrank_mode},
                         {"f_min", params.luhn.f_min},
                         {"gap_limit", params.luhn.gap_limit},
                         {"positional_boost", params.luhn.positional_boost},
                         {"L", params.klsum.word_budget},
                         {"epsilon", params.klsum.epsilon},
                         {"stopwords", provenance}};
        std::cout << out.dump(2) << "\n";
    } else if (format == "tsv") {
        std::cout << "algorithm\trecall\tprecision\tf1\n";
        for (const Row& row : rows) {
            std::cout << row.algorithm << '\t' << format_metric(row.score.recall) << '\t'
                      << format_metric(row.score.precision) << '\t'
                      << format_metric(row.score.f1) << '\n';
        }
    } else {
        std::printf("%-10s %-10s %-10s %-10s\n", "algorithm", "recall", "precision", "f1");
        for (const Row& row : rows) {
            std::printf("%-10s %-10s %-10s %-10s\n", row.algorithm.c_str(),
                        format_metric(row.score.recall).c_str(),
                        format_metric(row.score.precision).c_str(),
                        format_metric(row.score.f1).c_str());
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sumforge: extractive summarization, token frequencies and "
                 "clipped n-gram evaluation for plain-text corpora"};
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"json", "tsv", "text"};
    const std::vector<std::string> algos = {"lexrank", "lsa", "luhn", "klsum"};

    // summarize
    auto* cmd_summarize = app.add_subcommand("summarize", "Summarize a corpus");
    std::string s_input, s_algo, s_stopwords, s_format = "json";
    bool s_concat = true;
    int s_k = 11;
    AlgorithmParams s_params;
    cmd_summarize->add_option("--input", s_input, "Corpus directory or text file")
        ->required();
    cmd_summarize->add_option("--algo", s_algo, "Summarization algorithm")
        ->required()
        ->check(CLI::IsMember(algos));
    cmd_summarize->add_flag("--concat,!--no-concat", s_concat,
                            "Join directory files into one document")
        ->capture_default_str();
    cmd_summarize->add_option("-k,--sentences", s_k, "Sentence budget")
        ->capture_default_str();
    cmd_summarize->add_option("--stopwords", s_stopwords, "Stopword file override");
    cmd_summarize->add_option("--format", s_format, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    cmd_summarize->add_option("--damping", s_params.lexrank.damping, "LexRank damping")
        ->capture_default_str();
    cmd_summarize->add_option("--threshold", s_params.lexrank.threshold,
                              "LexRank similarity threshold")
        ->capture_default_str();
    cmd_summarize->add_option("--mode", s_params.lexrank_mode,
                              "LexRank mode: continuous or threshold")
        ->check(CLI::IsMember({"continuous", "threshold"}))
        ->capture_default_str();
    cmd_summarize->add_option("--tol", s_params.lexrank.tol, "LexRank convergence tolerance")
        ->capture_default_str();
    cmd_summarize->add_option("--max-iter", s_params.lexrank.max_iter,
                              "LexRank iteration cap")
        ->capture_default_str();
    cmd_summarize->add_option("--f-min", s_params.luhn.f_min,
                              "Luhn minimum significant-word frequency")
        ->capture_default_str();
    cmd_summarize->add_option("--gap-limit", s_params.luhn.gap_limit,
                              "Luhn cluster gap limit")
        ->capture_default_str();
    cmd_summarize->add_flag("--positional-boost", s_params.luhn.positional_boost,
                            "Weight early sentences up in Luhn scoring");
    cmd_summarize->add_option("-L,--budget", s_params.klsum.word_budget,
                              "KL-Sum content-token budget")
        ->capture_default_str();
    cmd_summarize->add_option("--epsilon", s_params.klsum.epsilon,
                              "KL-Sum smoothing epsilon")
        ->capture_default_str();

    // evaluate
    auto* cmd_evaluate = app.add_subcommand("evaluate", "Score a candidate against a reference");
    std::string e_candidate, e_reference, e_stopwords, e_format = "json";
    int e_n = 1;
    bool e_filter = false;
    cmd_evaluate->add_option("--candidate", e_candidate, "Candidate text file")->required();
    cmd_evaluate->add_option("--reference", e_reference, "Reference text file")->required();
    cmd_evaluate->add_option("-n,--n,--order", e_n, "n-gram order")
        ->check(CLI::Range(1, 3))
        ->capture_default_str();
    cmd_evaluate->add_flag("--filter-stopwords", e_filter,
                           "Remove stopwords before scoring (kept by default)");
    cmd_evaluate->add_option("--stopwords", e_stopwords, "Stopword file override");
    cmd_evaluate->add_option("--format", e_format, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();

    // freq
    auto* cmd_freq = app.add_subcommand("freq", "Report token frequencies");
    std::string f_input, f_stopwords, f_format = "json";
    bool f_concat = true, f_filtered = false;
    int f_top = 20;
    cmd_freq->add_option("--input", f_input, "Corpus directory or text file")->required();
    cmd_freq->add_flag("--concat,!--no-concat", f_concat,
                       "Join directory files into one document")
        ->capture_default_str();
    cmd_freq->add_option("--top", f_top, "Number of entries to print")->capture_default_str();
    cmd_freq->add_flag("--filtered", f_filtered, "Apply stopword removal first");
    cmd_freq->add_option("--stopwords", f_stopwords, "Stopword file override");
    cmd_freq->add_option("--format", f_format, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();

    // bench
    auto* cmd_bench = app.add_subcommand(
        "bench", "Run all four algorithms and score each against a reference");
    std::string b_input, b_reference, b_stopwords, b_format = "json";
    bool b_concat = true;
    int b_k = 11, b_n = 1;
    AlgorithmParams b_params;
    cmd_bench->add_option("--input", b_input, "Corpus directory or text file")->required();
    cmd_bench->add_option("--reference", b_reference, "Reference summary file")->required();
    cmd_bench->add_flag("--concat,!--no-concat", b_concat,
                        "Join directory files into one document")
        ->capture_default_str();
    cmd_bench->add_option("-k,--sentences", b_k, "Sentence budget")->capture_default_str();
    cmd_bench->add_option("-n,--n,--order", b_n, "n-gram order")
        ->check(CLI::Range(1, 3))
        ->capture_default_str();
    cmd_bench->add_option("--stopwords", b_stopwords, "Stopword file override");
    cmd_bench->add_option("--format", b_format, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    cmd_bench->add_option("--damping", b_params.lexrank.damping, "LexRank damping")
        ->capture_default_str();
    cmd_bench->add_option("--threshold", b_params.lexrank.threshold,
                          "LexRank similarity threshold")
        ->capture_default_str();
    cmd_bench->add_option("--mode", b_params.lexrank_mode,
                          "LexRank mode: continuous or threshold")
        ->check(CLI::IsMember({"continuous", "threshold"}))
        ->capture_default_str();
    cmd_bench->add_option("--f-min", b_params.luhn.f_min,
                          "Luhn minimum significant-word frequency")
        ->capture_default_str();
    cmd_bench->add_option("--gap-limit", b_params.luhn.gap_limit, "Luhn cluster gap limit")
        ->capture_default_str();
    cmd_bench->add_flag("--positional-boost", b_params.luhn.positional_boost,
                        "Weight early sentences up in Luhn scoring");
    cmd_bench->add_option("-L,--budget", b_params.klsum.word_budget,
                          "KL-Sum content-token budget")
        ->capture_default_str();
    cmd_bench->add_option("--epsilon", b_params.klsum.epsilon, "KL-Sum smoothing epsilon")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: config: cli_parse: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_summarize->parsed()) {
            return run_summarize(s_input, s_concat, s_algo, s_k, s_stopwords, s_format,
                                 s_params);
        }
        if (cmd_evaluate->parsed()) {
            return run_evaluate(e_candidate, e_reference, e_n, e_filter, e_stopwords,
                                e_format);
        }
        if (cmd_freq->parsed()) {
            return run_freq(f_input, f_concat, f_top, f_filtered, f_stopwords, f_format);
        }
        if (cmd_bench->parsed()) {
            return run_bench(b_input, b_concat, b_reference, b_k, b_n, b_stopwords,
                             b_format, b_params);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << category_label(e.category()) << ": "
                  << errc_name(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: internal: exception: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
