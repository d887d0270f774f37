#pragma once

#include <stdexcept>
#include <string>

namespace edr {

// Machine-readable failure categories. The CLI maps these to exit codes and
// emits them in the JSON error record on stderr.
enum class ErrorKind {
    parse,                 // malformed input row/value
    ordering,              // dates not strictly increasing
    domain,                // argument outside its mathematical domain
    empty_result,          // aggregation produced nothing
    insufficient_data,     // fewer observations than the operation needs
    alignment,             // series dates do not line up
    undefined_prospect,    // no mass strictly above the mean
    undefined_beta,        // zero market variance or zero downside mass
    no_real_solution,      // risk-neutral equation has no root
    singular_slope,        // vanishing denominator in the slope formula
    calibration_range,     // calibrated risk aversion not positive
    no_optimum,            // frontier fixed point has no root in bracket
    no_equilibrium,        // parallel supply/demand curves
    degenerate_reference,  // risk-seeking solver called with zero prior loss
    singular_design,       // regressor has zero variance
    degenerate_test,       // t-test on a zero-variance sample
    io,                    // file open/read/write failure
    usage,                 // bad command line
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message, std::string context = {})
        : std::runtime_error(std::move(message)), kind_(kind), context_(std::move(context)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& context() const noexcept { return context_; }

  private:
    ErrorKind kind_;
    std::string context_;
};

inline const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::parse: return "parse";
        case ErrorKind::ordering: return "ordering";
        case ErrorKind::domain: return "domain";
        case ErrorKind::empty_result: return "empty_result";
        case ErrorKind::insufficient_data: return "insufficient_data";
        case ErrorKind::alignment: return "alignment";
        case ErrorKind::undefined_prospect: return "undefined_prospect";
        case ErrorKind::undefined_beta: return "undefined_beta";
        case ErrorKind::no_real_solution: return "no_real_solution";
        case ErrorKind::singular_slope: return "singular_slope";
        case ErrorKind::calibration_range: return "calibration_range";
        case ErrorKind::no_optimum: return "no_optimum";
        case ErrorKind::no_equilibrium: return "no_equilibrium";
        case ErrorKind::degenerate_reference: return "degenerate_reference";
        case ErrorKind::singular_design: return "singular_design";
        case ErrorKind::degenerate_test: return "degenerate_test";
        case ErrorKind::io: return "io";
        case ErrorKind::usage: return "usage";
    }
    return "unknown";
}

}  // namespace edr
