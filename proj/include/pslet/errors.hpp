#pragma once

#include <stdexcept>
#include <string>

namespace pslet {

// Failure taxonomy shared by the whole library.  The CLI maps these to
// machine-readable error classes and exit codes.
enum class ErrorClass {
    contract_violation,
    singular_point,
    configuration,
    domain,
    no_bound_state,
    invalid_frequency,
    inconsistent_classical_point,
    recursion_inconsistency,
    degenerate_order,
    arity,
    degenerate_table,
    pole,
    truncation_unreliable,
    state_identification,
    grid,
    io,
};

inline const char* to_string(ErrorClass c) {
    switch (c) {
        case ErrorClass::contract_violation: return "contract-violation";
        case ErrorClass::singular_point: return "singular-point";
        case ErrorClass::configuration: return "configuration";
        case ErrorClass::domain: return "domain";
        case ErrorClass::no_bound_state: return "no-bound-state";
        case ErrorClass::invalid_frequency: return "invalid-frequency";
        case ErrorClass::inconsistent_classical_point: return "inconsistent-classical-point";
        case ErrorClass::recursion_inconsistency: return "recursion-inconsistency";
        case ErrorClass::degenerate_order: return "degenerate-order";
        case ErrorClass::arity: return "arity";
        case ErrorClass::degenerate_table: return "degenerate-table";
        case ErrorClass::pole: return "pole";
        case ErrorClass::truncation_unreliable: return "truncation-unreliable";
        case ErrorClass::state_identification: return "state-identification";
        case ErrorClass::grid: return "grid";
        case ErrorClass::io: return "io";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorClass cls, std::string msg) : std::runtime_error(std::move(msg)), cls_(cls) {}
    ErrorClass cls() const noexcept { return cls_; }

  private:
    ErrorClass cls_;
};

[[noreturn]] inline void fail(ErrorClass c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, ErrorClass c, const std::string& msg) {
    if (!ok) fail(c, msg);
}

}  // namespace pslet
