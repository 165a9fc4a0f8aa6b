#pragma once

#include <stdexcept>
#include <string>

namespace verlinde {

// Error taxonomy mirrored by the CLI exit codes:
//   input_error    -> 1 (bad arguments, malformed files, out-of-domain data)
//   numeric_error  -> 2 (a numeric consistency check failed; indicates a bug
//                        or broken input data, never a rounding hiccup)
//   resource_error -> 3 (a size guard tripped)
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a graded product demands half of an odd fusion coefficient.
// Cannot happen for involution data coming from an actual group involution;
// seeing it means the (sigma, epsilon) datum is inconsistent.
struct evenness_violation : numeric_error {
    explicit evenness_violation(const std::string& msg) : numeric_error(msg) {}
};

} // namespace verlinde
