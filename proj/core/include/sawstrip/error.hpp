#pragma once

#include <stdexcept>
#include <string>

namespace sawstrip {

// Raised for domain failures (bad preconditions, unsolvable inputs).
// The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sawstrip
