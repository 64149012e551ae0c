#pragma once

#include <stdexcept>
#include <string>

namespace wnk {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A precondition of an operation was violated by the caller.
struct domain_error : error {
  using error::error;
};

// An internal invariant failed; indicates a bug, not bad input.
struct internal_error : error {
  using error::error;
};

}  // namespace wnk
