#pragma once

#include <cstdint>
#include <optional>
#include <type_traits>

#include <Eigen/Core>

#include "cubewalk/boolean_domain.hpp"
#include "cubewalk/errors.hpp"

namespace cubewalk {

using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Dense adjacency matrices are only materialized up to this dimension.
inline constexpr int kMaxDenseDimension = 13;

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("Walsh-Hadamard butterfly overflows int64");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("Walsh-Hadamard butterfly overflows int64");
  return r;
}

}  // namespace detail

/// In-place unnormalized Walsh-Hadamard transform: v[k] <- sum_l (-1)^{<k|l>} v[l].
/// Applying it twice multiplies by n. int64 vectors use overflow-checked butterflies.
template <typename Derived>
void fwht_inplace(Eigen::DenseBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  const auto n = static_cast<std::size_t>(v.size());
  dimension_of_length(n);
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t block = 0; block < n; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const Scalar a = v(i);
        const Scalar b = v(i + half);
        if constexpr (std::is_same_v<Scalar, std::int64_t>) {
          v(i) = detail::checked_add(a, b);
          v(i + half) = detail::checked_sub(a, b);
        } else {
          v(i) = a + b;
          v(i + half) = a - b;
        }
      }
    }
  }
}

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> fwht(const Eigen::DenseBase<Derived>& v) {
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> out = v;
  fwht_inplace(out);
  return out;
}

/// Weights z[h] of the edge classes {u, u xor h}; z[0] is the loop weight.
/// Integer-valued input keeps an exact int64 copy alongside the real values.
class WeightVector {
 public:
  explicit WeightVector(IntVector z);
  /// Integrality is detected: entries that are all whole numbers of magnitude
  /// at most 2^53 produce an integral vector.
  explicit WeightVector(const Eigen::VectorXd& z);

  int dimension() const noexcept { return dimension_; }
  Index size() const noexcept { return Index{1} << dimension_; }
  bool is_integral() const noexcept { return exact_.has_value(); }

  const Eigen::VectorXd& values() const noexcept { return values_; }
  /// Throws DomainError when the weights are not integral.
  const IntVector& integers() const;
  double operator[](Index h) const { return values_(h); }

  WeightVector with_loop_weight(double loop) const;

 private:
  int dimension_;
  Eigen::VectorXd values_;
  std::optional<IntVector> exact_;
};

/// lambda[k] is the eigenvalue of column k of the Walsh-Hadamard basis.
class Spectrum {
 public:
  explicit Spectrum(IntVector lambda);
  explicit Spectrum(const Eigen::VectorXd& lambda);

  int dimension() const noexcept { return dimension_; }
  Index size() const noexcept { return Index{1} << dimension_; }
  bool is_integral() const noexcept { return exact_.has_value(); }
  const Eigen::VectorXd& values() const noexcept { return values_; }
  const IntVector& integers() const;
  double operator[](Index k) const { return values_(k); }

 private:
  int dimension_;
  Eigen::VectorXd values_;
  std::optional<IntVector> exact_;
};

/// Dense symmetric adjacency matrix on the vertex set Z_2^d.
class WeightedGraph {
 public:
  /// Checks squareness, power-of-two order and symmetry.
  explicit WeightedGraph(Eigen::MatrixXd a);

  int dimension() const noexcept { return dimension_; }
  Index size() const noexcept { return Index{1} << dimension_; }
  const Eigen::MatrixXd& matrix() const noexcept { return a_; }

 private:
  int dimension_;
  Eigen::MatrixXd a_;
};

struct StructuralReport {
  bool loop_free = false;
  bool integral = false;
  /// 0 (all even) or 1 (all odd); set only for integral weights.
  std::optional<int> eigenvalue_parity;
  /// Sum of eigenvalues, n * z[0].
  double trace = 0.0;
};

Spectrum eigenvalues_from_weights(const WeightVector& z);
WeightedGraph adjacency_from_weights(const WeightVector& z);
/// Inverse of adjacency_from_weights; throws StructureError naming the first
/// (i, j) with a[i][j] != a[0][i xor j].
WeightVector weights_from_adjacency(const WeightedGraph& graph);
StructuralReport structural_report(const WeightVector& z);

}  // namespace cubewalk
