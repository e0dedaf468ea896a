#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace frobcrit {

/// Raised for invalid input to any library operation: malformed specs,
/// out-of-range indices, rank mismatches, violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weyl enumeration refused because the group order exceeds the cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what, std::uint64_t order)
      : Error(std::move(what)), order_(order) {}
  std::uint64_t order() const { return order_; }

 private:
  std::uint64_t order_;
};

}  // namespace frobcrit
