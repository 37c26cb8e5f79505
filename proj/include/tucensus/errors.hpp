#pragma once

#include <stdexcept>
#include <string>

namespace tucensus {

enum class errc {
    self_loop,
    duplicate_edge,
    vertex_out_of_range,
    index_out_of_range,
    non_square,
    shape_mismatch,
    not_symmetric,
    arity_mismatch,
    disconnected,
    too_small,
    budget_exceeded,
    malformed,
    count_mismatch,
    bad_checksum_char,
    truncated_bits,
    numeric_failure,
};

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::self_loop: return "SelfLoop";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::non_square: return "NonSquare";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::not_symmetric: return "NotSymmetric";
        case errc::arity_mismatch: return "ArityMismatch";
        case errc::disconnected: return "Disconnected";
        case errc::too_small: return "TooSmall";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::malformed: return "Malformed";
        case errc::count_mismatch: return "CountMismatch";
        case errc::bad_checksum_char: return "BadChecksumChar";
        case errc::truncated_bits: return "TruncatedBits";
        case errc::numeric_failure: return "NumericFailure";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code), message_(message) {}

    errc code() const noexcept { return code_; }
    const std::string& message() const noexcept { return message_; }

private:
    errc code_;
    std::string message_;
};

} // namespace tucensus
