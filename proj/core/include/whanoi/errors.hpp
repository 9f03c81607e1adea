#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace whanoi {

/// Two or more move types are forbidden, so towers of two or more discs
/// cannot be transferred at all.
class UnsolvableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pure-branch closed form was asked to consume an infinite weight.
class InapplicableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested instance is larger than a configured resource cap.
class CapExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// The two endpoints of a shortest-path query lie in different components.
class DisconnectedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IllegalMoveError : public std::invalid_argument {
 public:
  IllegalMoveError(std::size_t step, const std::string& reason)
      : std::invalid_argument("illegal move at step " + std::to_string(step) + ": " + reason),
        step_(step) {}

  [[nodiscard]] std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace whanoi
