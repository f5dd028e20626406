#pragma once

#include <stdexcept>
#include <string>

namespace univoque {

// Domain errors carry a stable code used by the CLI's JSON error envelope and by tests.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* out_of_range = "OutOfRange";
inline constexpr const char* alpha_invalid = "AlphaInvalid";
inline constexpr const char* not_quasi_greedy_alpha = "NotQuasiGreedyAlpha";
inline constexpr const char* not_finite_greedy = "NotFiniteGreedy";
inline constexpr const char* not_quasi_greedy = "NotQuasiGreedy";
inline constexpr const char* not_in_v = "NotInV";
inline constexpr const char* not_left_endpoint = "NotLeftEndpoint";
inline constexpr const char* not_v_only = "NotVOnly";
inline constexpr const char* not_univoque = "NotUnivoque";
inline constexpr const char* in_closure_u = "InClosureU";
inline constexpr const char* unclassifiable = "Unclassifiable";
inline constexpr const char* undecided_at_precision = "UndecidedAtPrecision";
inline constexpr const char* unsupported = "Unsupported";
inline constexpr const char* alphabet_mismatch = "AlphabetMismatch";
inline constexpr const char* invalid_interval = "InvalidInterval";
inline constexpr const char* division_by_zero = "DivisionByZero";
inline constexpr const char* search_exhausted = "SearchExhausted";
inline constexpr const char* oracle_overflow = "OracleOverflow";
inline constexpr const char* parse_failure = "ParseFailure";
}  // namespace errc

[[noreturn]] inline void fail(const char* code, const std::string& message) {
    throw DomainError(code, message);
}

}  // namespace univoque
