#pragma once

#include <stdexcept>
#include <string>

namespace cmi {

// Raised for malformed input and violated operation preconditions: parse
// errors, mixed ambient rings, non-permutation orders, out-of-range vertices.
// The CLI maps it to the input-error exit code.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cmi
