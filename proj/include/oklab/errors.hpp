#pragma once

#include <stdexcept>
#include <string>

namespace oklab {

// Raised when input data is malformed: unparseable rationals, schema
// violations, wrong field types. The CLI maps this to exit code 2.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when data parses fine but a mathematical precondition fails:
// unbounded halfspace systems, negative dilation factors, a slice
// parameter outside [0, c], and so on. The CLI maps this to exit code 3.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace oklab
