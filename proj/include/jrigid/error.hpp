#pragma once

#include <stdexcept>
#include <string>

namespace jrigid {

// Thrown when a constructed object fails one of its invariants or an
// operation's precondition is violated.  The CLI maps this to exit code 1.
struct MathError : std::runtime_error {
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw MathError(what);
}

}  // namespace jrigid
