#pragma once

#include <stdexcept>
#include <string>

namespace ptsb {

// Requested parameters leave the PT-unbroken phase (complex qubit spectrum,
// or a similarity transform that does not exist there).
class PTBrokenError : public std::domain_error {
 public:
  explicit PTBrokenError(const std::string& what) : std::domain_error(what) {}
};

// Truncated operator dimensions that are unusable (too small, mismatched).
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// An iterative routine ran out of budget before reaching its tolerance.
class NonConvergenceError : public std::runtime_error {
 public:
  explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A NaN/Inf surfaced where a finite value is required.
class NonFiniteError : public std::runtime_error {
 public:
  explicit NonFiniteError(const std::string& what) : std::runtime_error(what) {}
};

// The bath similarity transform overflowed or lost invertibility.
class SingularSimilarityError : public std::runtime_error {
 public:
  explicit SingularSimilarityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ptsb
