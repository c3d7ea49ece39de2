#pragma once

#include <stdexcept>

namespace hmt {

// Invalid user-supplied configuration or input data.  CLI exit code 2.
using ConfigError = std::invalid_argument;

// A request that exceeds a documented brute-force or enumeration ceiling.
// CLI exit code 3.
struct ScaleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A broken internal invariant; always a bug, never a user error.
// CLI exit code 4.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace hmt
