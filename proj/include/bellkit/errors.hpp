#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bellkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Precondition violations: non-Hermitian input, non-unit direction, odd
// dimension for a traceless dichotomic, out-of-range probabilities, ...
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class CommutationError : public Error {
 public:
  CommutationError(double norm, std::size_t first, std::size_t second)
      : Error("operators " + std::to_string(first) + " and " + std::to_string(second) +
              " do not commute (||[A,B]||_F = " + std::to_string(norm) + ")"),
        norm_(norm),
        first_(first),
        second_(second) {}

  double norm() const { return norm_; }
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  double norm_;
  std::size_t first_;
  std::size_t second_;
};

// Marginals that no probability table can produce (p_AB > p_A, ...). Kept
// distinct from Bell-type infeasibility.
class InconsistentMarginals : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  using Error::Error;
};

}  // namespace bellkit
