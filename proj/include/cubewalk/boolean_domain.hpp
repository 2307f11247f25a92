#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include <Eigen/Core>

namespace cubewalk {

/// Largest supported dimension d of Z_2^d.
inline constexpr int kMaxDimension = 20;

using Index = std::uint32_t;

/// Element of the Boolean group Z_2^d. Bit j of `bits` carries weight 2^j;
/// element 0 is the all-zero string (the group identity).
class GroupElement {
 public:
  GroupElement(Index bits, int dimension);

  Index bits() const noexcept { return bits_; }
  int dimension() const noexcept { return dimension_; }
  Index order() const noexcept { return Index{1} << dimension_; }

  bool is_identity() const noexcept { return bits_ == 0; }
  bool bit(int j) const noexcept { return (bits_ >> j) & 1U; }

  /// Most significant bit first, e.g. "101" for bits = 5, d = 3.
  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  Index bits_;
  int dimension_;
};

/// popcount(a AND b) mod 2.
int parity_inner(const GroupElement& a, const GroupElement& b);
GroupElement operator^(const GroupElement& a, const GroupElement& b);
GroupElement xor_elements(const GroupElement& a, const GroupElement& b);
/// Character value (-1)^{<i|j>}.
int hadamard_sign(const GroupElement& i, const GroupElement& j);

// Unchecked index forms used by the inner loops.
inline int parity_inner(Index a, Index b) noexcept { return std::popcount(a & b) & 1; }
inline int hadamard_sign(Index i, Index j) noexcept { return 1 - 2 * parity_inner(i, j); }

/// Validates 1 <= d <= kMaxDimension and returns n = 2^d.
Index checked_order(int dimension);
/// Returns d when n = 2^d with 1 <= d <= kMaxDimension, throws InputError otherwise.
int dimension_of_length(std::size_t length);

/// Unnormalized sign matrix [hadamard_sign(i, j)] of size 2^d.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> hadamard_signs(int dimension) {
  const Index n = checked_order(dimension);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> h(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) h(i, j) = Scalar(hadamard_sign(i, j));
  return h;
}

/// Orthogonal Walsh-Hadamard eigenbasis P = signs / sqrt(n).
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> hadamard_basis(int dimension) {
  using std::sqrt;
  const Index n = checked_order(dimension);
  return hadamard_signs<Scalar>(dimension) / sqrt(Scalar(n));
}

}  // namespace cubewalk
