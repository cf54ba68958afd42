#pragma once

#include <stdexcept>
#include <string>

namespace boxcover {

/// Malformed or precondition-violating input (bad files, invalid covers).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural invariant failed inside an algorithm. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InternalError(what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) throw InputError(what);
}

}  // namespace detail
}  // namespace boxcover
