#pragma once

#include <stdexcept>
#include <string>

namespace severi {

// Error taxonomy shared by every module. The CLI and the C API map these
// onto exit codes / status codes, so the `code` strings are part of the
// external interface and must stay stable.
enum class ErrorCode {
    zero_polynomial,
    non_isolated,
    resolution_depth_exceeded,
    shape_mismatch,
    unsupported_budget,
    out_of_range,
    invalid_edge,
    invalid_spec,
    parse_error,
    assertion_failure,
    non_positive_valuation,
    unsupported_format,
    unrealizable,
    invalid_input,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::zero_polynomial: return "zero_polynomial";
        case ErrorCode::non_isolated: return "non_isolated";
        case ErrorCode::resolution_depth_exceeded: return "resolution_depth_exceeded";
        case ErrorCode::shape_mismatch: return "shape_mismatch";
        case ErrorCode::unsupported_budget: return "unsupported_budget";
        case ErrorCode::out_of_range: return "out_of_range";
        case ErrorCode::invalid_edge: return "invalid_edge";
        case ErrorCode::invalid_spec: return "invalid_spec";
        case ErrorCode::parse_error: return "parse_error";
        case ErrorCode::assertion_failure: return "assertion_failure";
        case ErrorCode::non_positive_valuation: return "non_positive_valuation";
        case ErrorCode::unsupported_format: return "unsupported_format";
        case ErrorCode::unrealizable: return "unrealizable";
        case ErrorCode::invalid_input: return "invalid_input";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace severi
