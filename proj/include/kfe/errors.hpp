#ifndef KFE_ERRORS_HPP
#define KFE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kfe
{

// Division by an exact zero (rational, polynomial or rational function).
struct zero_division_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Arithmetic between polynomials in two different formal symbols.
struct symbol_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A parameter bound to an excluded value (lambda = 0, mu = 1, N = 0, ...).
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A series operation needs coefficients beyond the known truncation window.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual/JSON input.
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace kfe

#endif
