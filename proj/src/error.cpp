#include "sumforge/error.hpp"

namespace sumforge {

const char* errc_name(errc code) noexcept {
    switch (code) {
    case errc::not_found: return "not_found";
    case errc::not_utf8: return "not_utf8";
    case errc::empty_file: return "empty_file";
    case errc::no_text_files: return "no_text_files";
    case errc::no_sentences: return "no_sentences";
    case errc::empty_input: return "empty_input";
    case errc::empty_sentence: return "empty_sentence";
    case errc::empty_vocabulary: return "empty_vocabulary";
    case errc::invalid_order: return "invalid_order";
    case errc::support_mismatch: return "support_mismatch";
    case errc::order_mismatch: return "order_mismatch";
    case errc::empty_reference: return "empty_reference";
    case errc::invalid_parameter: return "invalid_parameter";
    case errc::numerical_failure: return "numerical_failure";
    case errc::empty_scores: return "empty_scores";
    case errc::empty_vector: return "empty_vector";
    }
    return "unknown";
}

error_category category_of(errc code) noexcept {
    switch (code) {
    case errc::invalid_parameter:
    case errc::invalid_order:
    case errc::order_mismatch:
    case errc::support_mismatch:
        return error_category::config;
    case errc::not_found:
    case errc::not_utf8:
    case errc::no_text_files:
        return error_category::io;
    case errc::empty_file:
    case errc::no_sentences:
    case errc::empty_input:
    case errc::empty_sentence:
    case errc::empty_vocabulary:
    case errc::empty_reference:
    case errc::empty_scores:
    case errc::empty_vector:
        return error_category::degenerate_input;
    case errc::numerical_failure:
        return error_category::internal;
    }
    return error_category::internal;
}

} // namespace sumforge
