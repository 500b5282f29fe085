#pragma once

#include <stdexcept>

namespace hexdist {

// Raised when an iterative numerical routine cannot reach its accuracy
// target (adaptive quadrature out of depth, rank-deficient least squares).
// Input validation problems use std::invalid_argument and out-of-domain
// arguments use std::domain_error instead.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hexdist
