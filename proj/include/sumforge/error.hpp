#pragma once

#include <stdexcept>
#include <string>

namespace sumforge {

/// Every failure mode the library reports. Values map onto CLI exit codes
/// through category_of().
enum class errc {
    not_found,
    not_utf8,
    empty_file,
    no_text_files,
    no_sentences,
    empty_input,
    empty_sentence,
    empty_vocabulary,
    invalid_order,
    support_mismatch,
    order_mismatch,
    empty_reference,
    invalid_parameter,
    numerical_failure,
    empty_scores,
    empty_vector,
};

enum class error_category {
    config,           // caller passed an invalid parameter
    io,               // filesystem / encoding problem
    degenerate_input, // structurally valid call on empty or unusable input
    internal,
};

const char* errc_name(errc code) noexcept;
error_category category_of(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }
    error_category category() const noexcept { return category_of(code_); }

private:
    errc code_;
};

} // namespace sumforge
