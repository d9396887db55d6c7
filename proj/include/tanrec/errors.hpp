#pragma once

#include <stdexcept>
#include <string>

namespace tanrec {

// Caller handed us something outside an operation's domain (even q, p == q,
// a composite where a prime is required, ...).  The CLI maps these to exit 2.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A prime was required and the argument is not an odd prime.
class not_a_prime : public invalid_input {
public:
    using invalid_input::invalid_input;
};

// Root-product machinery only supports leading coefficient +1 or -1.
class unsupported_leading_coefficient : public invalid_input {
public:
    using invalid_input::invalid_input;
};

// Floating-point evaluation hit a pole of tan or of the rational form.
class pole_error : public invalid_input {
public:
    using invalid_input::invalid_input;
};

// An identity that is a theorem failed to hold in exact arithmetic.
// Reaching this means a bug, never bad user input.  CLI maps it to exit 1.
class internal_inconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace tanrec
