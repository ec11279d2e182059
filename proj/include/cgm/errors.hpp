#pragma once

#include <stdexcept>
#include <string>

namespace cgm {

// Error categories surfaced by the toolkit. Every throwing operation uses
// Error with one of these codes so callers (CLI, oracle) can dispatch on the
// failure kind without string matching.
enum class errc {
    degenerate_input,      // zero polynomial, both-zero gcd input, ...
    unsupported_degree,    // factorization above degree 4
    type_mismatch,         // dimension or field mismatch
    singular_matrix,       // inverse/conjugation of a singular matrix
    wrong_case,            // witness constructor applied outside its pattern
    invalid_factorization, // non-coprime factors handed to the CRT projector
    precondition,          // violated operation precondition
    unsupported_pair,      // path query outside the supported cases
    too_large,             // enumeration guard exceeded
    no_common_commuter,    // no non-scalar common commuter exists (n = 2 blocks)
    parse,                 // malformed serialized input
    internal,              // certified postcondition failed (a bug)
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::degenerate_input: return "degenerate-input";
    case errc::unsupported_degree: return "unsupported-degree";
    case errc::type_mismatch: return "type-mismatch";
    case errc::singular_matrix: return "singular-matrix";
    case errc::wrong_case: return "wrong-case";
    case errc::invalid_factorization: return "invalid-factorization";
    case errc::precondition: return "precondition";
    case errc::unsupported_pair: return "unsupported-pair";
    case errc::too_large: return "too-large";
    case errc::no_common_commuter: return "no-common-commuter";
    case errc::parse: return "parse";
    case errc::internal: return "internal";
    }
    return "unknown";
}

} // namespace cgm
