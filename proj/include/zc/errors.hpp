#pragma once

#include <stdexcept>
#include <string>

namespace zc {

// Bad user input (invalid spec, malformed instance). CLI exit code 2.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Root finding or summation did not reach the requested accuracy. CLI exit code 3.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal identity that must hold exactly did not.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace zc
