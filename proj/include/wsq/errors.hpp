#pragma once

#include <stdexcept>
#include <string>

namespace wsq {

// Caller supplied something outside an operation's domain (bad sizes,
// mismatched ground sets, non-maximal collections, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical invariant that must hold was observed to fail at runtime.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InvariantError(what);
}

}  // namespace wsq
