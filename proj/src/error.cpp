#include "bichar/error.hpp"

namespace bichar {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::signature_mismatch: return "SignatureMismatch";
        case ErrorKind::non_unit_constant_term: return "NonUnitConstantTerm";
        case ErrorKind::no_square_root: return "NoSquareRoot";
        case ErrorKind::non_constant_grouplike_value: return "NonConstantGrouplikeValue";
        case ErrorKind::not_symmetric: return "NotSymmetric";
        case ErrorKind::invalid_argument: return "InvalidArgument";
        case ErrorKind::overflow: return "Overflow";
        case ErrorKind::parse_error: return "ParseError";
        case ErrorKind::unknown_generator: return "UnknownGenerator";
        case ErrorKind::mode_parity_mismatch: return "ModeParityMismatch";
        case ErrorKind::twisted_word_has_no_zero_evaluation: return "TwistedWordHasNoZeroEvaluation";
        case ErrorKind::config_error: return "ConfigError";
    }
    return "Unknown";
}

namespace {

std::string describe_parse(std::size_t offset, const std::vector<std::string>& expected,
                           const std::string& detail) {
    std::string msg = "ParseError at byte " + std::to_string(offset) + ": " + detail;
    if (!expected.empty()) {
        msg += " (expected one of:";
        for (const auto& e : expected) msg += " " + e;
        msg += ")";
    }
    return msg;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail)
    : Error(ErrorKind::parse_error, describe_parse(offset, expected, detail)),
      offset_(offset),
      expected_(std::move(expected)) {}

NoSquareRoot::NoSquareRoot(std::size_t index)
    : Error(ErrorKind::no_square_root, "NoSquareRoot(" + std::to_string(index) + ")"), index_(index) {}

}  // namespace bichar
