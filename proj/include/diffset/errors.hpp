#pragma once

#include <stdexcept>
#include <string>

namespace diffset {

// Bad arguments: out-of-window members, malformed files, parameters out of range.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Well-formed parameters for which the requested bound or witness does not exist
// (eps >= gamma^2, empty Gamma region, non-positive extraction target).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace diffset
