#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubewalk {

/// Malformed arguments: dimension mismatch, bad lengths, out-of-range indices.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix that is not Z_2^d-circulant was handed to weights_from_adjacency.
class StructureError : public std::runtime_error {
 public:
  StructureError(std::size_t row, std::size_t col, const std::string& what)
      : std::runtime_error(what), row_(row), col_(col) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// Exact integer arithmetic would overflow 64 bits.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An operation that needs integer data received real-valued data.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Some eigenvalue difference lambda[k] - lambda[0] is odd.
class ParityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The spectrum admits no group element satisfying every phase condition.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No independent index set, or the system matrix is too ill-conditioned.
class ReconstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested dense object exceeds the configured size caps.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cubewalk
