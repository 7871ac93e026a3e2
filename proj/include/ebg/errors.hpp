#pragma once

#include <stdexcept>
#include <string>

namespace ebg {

// Bad user-supplied input: malformed file, out-of-range edge, inadmissible
// parameters, dimension mismatch.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed its configured work budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A violated internal invariant (inexact division, audit mismatch). These
// indicate a bug, never a bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace ebg
