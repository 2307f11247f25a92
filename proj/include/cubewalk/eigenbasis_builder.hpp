#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace cubewalk {

/// Order cap for the dense reconstruction routines (O(n^3) solve).
inline constexpr Eigen::Index kMaxBasisOrder = 4096;

/// Square matrix P with P^T P = I, checked to 1e-9 on construction.
class OrthogonalBasis {
 public:
  explicit OrthogonalBasis(Eigen::MatrixXd p);

  Eigen::Index size() const noexcept { return p_.rows(); }
  const Eigen::MatrixXd& matrix() const noexcept { return p_; }

 private:
  Eigen::MatrixXd p_;
};

/// n row pairs (r_j, c_j) of P. Entry a[r_j][c_j] of every graph sharing the
/// eigenvectors P is fixed to z[j].
struct IndexSet {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
  /// Set when every pair shares a constant row of P; holds that constant.
  std::optional<double> constant_row_value;
};

struct ReconstructionResult {
  Eigen::MatrixXd a;
  Eigen::VectorXd x;
  Eigen::MatrixXd q;
};

/// Row-selection with the no-zero-row fast path: a row k of P free of
/// (relative) zeros yields {(k, i)}; otherwise falls back to the greedy scan.
IndexSet select_index_set(const OrthogonalBasis& basis, double tol = 1e-10);

/// Greedy scan over (r, c), r <= c, lexicographic, keeping every pair whose
/// Hadamard-product row has Gram-Schmidt residual norm above tol.
IndexSet select_index_set_greedy(const OrthogonalBasis& basis, double tol = 1e-10);

/// Q[j][k] = P[r_j][k] * P[c_j][k].
Eigen::MatrixXd build_q(const OrthogonalBasis& basis, const IndexSet& index_set);

/// Solves Q x = z and assembles a = P diag(x) P^T. Throws ReconstructionError
/// when the condition estimate of Q exceeds 1e12.
ReconstructionResult reconstruct(const OrthogonalBasis& basis, const IndexSet& index_set,
                                 const Eigen::VectorXd& z);

/// Q x = z solved in closed form x = P^T z / mu when the index set uses a
/// constant row with value mu.
Eigen::VectorXd eigenvalues_constant_row(const OrthogonalBasis& basis, const IndexSet& index_set,
                                         const Eigen::VectorXd& z);

}  // namespace cubewalk
