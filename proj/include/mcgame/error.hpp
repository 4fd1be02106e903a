#pragma once

#include <stdexcept>
#include <string>

namespace mcgame {

// Base class for all domain errors raised by the library.
class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exponential object (table or query) would exceed the configured budget.
class SizeLimitError : public GameError {
 public:
  using GameError::GameError;
};

}  // namespace mcgame
