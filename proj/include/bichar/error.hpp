#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bichar {

/// Category of a domain failure. The CLI maps these onto exit codes.
enum class ErrorKind {
    signature_mismatch,
    non_unit_constant_term,
    no_square_root,
    non_constant_grouplike_value,
    not_symmetric,
    invalid_argument,
    overflow,
    parse_error,
    unknown_generator,
    mode_parity_mismatch,
    twisted_word_has_no_zero_evaluation,
    config_error,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failure with the byte offset at which it was detected and the
/// tokens that would have been accepted there.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail);

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Raised by grouplike_root when a diagonal grouplike value has no rational square root.
class NoSquareRoot : public Error {
public:
    explicit NoSquareRoot(std::size_t index);

    /// 1-based grouplike index.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

}  // namespace bichar
