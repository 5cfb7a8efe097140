#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ohara {

enum class Errc {
    non_exact_division,
    invalid_row_length,
    invalid_partition,
    structure_violation,
    index_out_of_range,
    degree_mismatch,
    parity_violation,
    precondition_violation,
    budget_exceeded,
    size_mismatch,
    cross_check_failed,
    positivity_violation,
    parse_error,
};

constexpr std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::non_exact_division: return "NON_EXACT_DIVISION";
    case Errc::invalid_row_length: return "INVALID_ROW_LENGTH";
    case Errc::invalid_partition: return "INVALID_PARTITION";
    case Errc::structure_violation: return "STRUCTURE_VIOLATION";
    case Errc::index_out_of_range: return "INDEX_OUT_OF_RANGE";
    case Errc::degree_mismatch: return "DEGREE_MISMATCH";
    case Errc::parity_violation: return "PARITY_VIOLATION";
    case Errc::precondition_violation: return "PRECONDITION_VIOLATION";
    case Errc::budget_exceeded: return "BUDGET_EXCEEDED";
    case Errc::size_mismatch: return "SIZE_MISMATCH";
    case Errc::cross_check_failed: return "CROSS_CHECK_FAILED";
    case Errc::positivity_violation: return "POSITIVITY_VIOLATION";
    case Errc::parse_error: return "PARSE_ERROR";
    }
    return "UNKNOWN";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace ohara
