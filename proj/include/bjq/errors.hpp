#pragma once

#include <stdexcept>
#include <string>

namespace bjq {

// Rejected input: bad parameters, mismatched grids, malformed specs.
// The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation that ran but cannot be trusted (e.g. mass at the grid edge).
// The CLI maps this to exit code 1.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Non-fatal diagnostics (boundary-mass warnings) go through this hook so
// the CLI can print them and tests can silence or count them.
using WarningSink = void (*)(const std::string&);
void set_warning_sink(WarningSink sink);
void warn(const std::string& message);

}  // namespace bjq
