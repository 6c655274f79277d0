#pragma once

#include <stdexcept>

namespace ctcodes {

// A computation would exceed its configured memory or size bound.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ctcodes
