#include "cubewalk/eigenbasis_builder.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/LU>

#include "cubewalk/errors.hpp"

namespace cubewalk {

namespace {

constexpr double kOrthogonalityTolerance = 1e-9;
constexpr double kZeroEntryRelative = 1e-12;
constexpr double kMaxCondition = 1e12;

void validate(const OrthogonalBasis& basis, const IndexSet& index_set) {
  const Eigen::Index n = basis.size();
  if (static_cast<Eigen::Index>(index_set.pairs.size()) != n)
    throw InputError("index set has " + std::to_string(index_set.pairs.size()) + " pairs, expected " +
                     std::to_string(n));
  for (const auto& [r, c] : index_set.pairs)
    if (r < 0 || r >= n || c < 0 || c >= n)
      throw InputError("index pair (" + std::to_string(r) + ", " + std::to_string(c) + ") out of range");
}

}  // namespace

OrthogonalBasis::OrthogonalBasis(Eigen::MatrixXd p) : p_(std::move(p)) {
  if (p_.rows() != p_.cols() || p_.rows() == 0) throw InputError("basis must be a non-empty square matrix");
  if (p_.rows() > kMaxBasisOrder)
    throw ResourceError("basis order limited to " + std::to_string(kMaxBasisOrder));
  if (!p_.allFinite()) throw InputError("basis contains non-finite entries");
  const Eigen::MatrixXd gram = p_.transpose() * p_;
  const double err = (gram - Eigen::MatrixXd::Identity(p_.rows(), p_.cols())).cwiseAbs().maxCoeff();
  if (err > kOrthogonalityTolerance)
    throw InputError("basis is not orthogonal: max |P^T P - I| = " + std::to_string(err));
}

IndexSet select_index_set(const OrthogonalBasis& basis, double tol) {
  if (!(tol > 0)) throw InputError("tolerance must be positive");
  const Eigen::MatrixXd& p = basis.matrix();
  const Eigen::Index n = basis.size();

  // Prefer a constant row; otherwise the zero-free row whose smallest entry is largest.
  std::optional<Eigen::Index> best;
  double best_min = 0.0;
  std::optional<double> constant;
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto row = p.row(k);
    const double min_abs = row.cwiseAbs().minCoeff();
    if (min_abs <= kZeroEntryRelative * row.norm()) continue;
    const bool is_constant = (row.array() - row(0)).abs().maxCoeff() <= tol;
    if (is_constant) {
      best = k;
      constant = row(0);
      break;
    }
    if (!best || min_abs > best_min) {
      best = k;
      best_min = min_abs;
    }
  }
  if (!best) return select_index_set_greedy(basis, tol);

  IndexSet out;
  out.pairs.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out.pairs.emplace_back(*best, i);
  out.constant_row_value = constant;
  return out;
}

IndexSet select_index_set_greedy(const OrthogonalBasis& basis, double tol) {
  if (!(tol > 0)) throw InputError("tolerance must be positive");
  const Eigen::MatrixXd& p = basis.matrix();
  const Eigen::Index n = basis.size();

  Eigen::MatrixXd accepted(n, n);  // orthonormal rows stored as columns
  Eigen::Index rank = 0;
  IndexSet out;
  for (Eigen::Index r = 0; r < n && rank < n; ++r) {
    for (Eigen::Index c = r; c < n && rank < n; ++c) {
      Eigen::VectorXd v = p.row(r).cwiseProduct(p.row(c)).transpose();
      for (Eigen::Index b = 0; b < rank; ++b) v -= accepted.col(b).dot(v) * accepted.col(b);
      const double residual = v.norm();
      if (residual > tol) {
        accepted.col(rank++) = v / residual;
        out.pairs.emplace_back(r, c);
      }
    }
  }
  if (rank < n)
    throw ReconstructionError("only " + std::to_string(rank) + " of " + std::to_string(n) +
                              " independent rows found at tolerance " + std::to_string(tol));
  return out;
}

Eigen::MatrixXd build_q(const OrthogonalBasis& basis, const IndexSet& index_set) {
  validate(basis, index_set);
  const Eigen::MatrixXd& p = basis.matrix();
  Eigen::MatrixXd q(basis.size(), basis.size());
  for (std::size_t j = 0; j < index_set.pairs.size(); ++j) {
    const auto [r, c] = index_set.pairs[j];
    q.row(static_cast<Eigen::Index>(j)) = p.row(r).cwiseProduct(p.row(c));
  }
  return q;
}

ReconstructionResult reconstruct(const OrthogonalBasis& basis, const IndexSet& index_set,
                                 const Eigen::VectorXd& z) {
  if (z.size() != basis.size())
    throw InputError("fixed-entry vector has length " + std::to_string(z.size()) + ", expected " +
                     std::to_string(basis.size()));
  ReconstructionResult out;
  out.q = build_q(basis, index_set);
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(out.q);
  const double rcond = lu.rcond();
  if (!(rcond > 0) || 1.0 / rcond > kMaxCondition)
    throw ReconstructionError("system matrix Q is singular or ill-conditioned (condition estimate " +
                              std::to_string(rcond > 0 ? 1.0 / rcond : std::numeric_limits<double>::infinity()) +
                              ")");
  out.x = lu.solve(z);
  const Eigen::MatrixXd& p = basis.matrix();
  out.a = p * out.x.asDiagonal() * p.transpose();
  // Symmetric by construction; remove rounding asymmetry.
  out.a = (0.5 * (out.a + out.a.transpose())).eval();
  return out;
}

Eigen::VectorXd eigenvalues_constant_row(const OrthogonalBasis& basis, const IndexSet& index_set,
                                         const Eigen::VectorXd& z) {
  validate(basis, index_set);
  if (!index_set.constant_row_value) throw InputError("index set does not use a constant row");
  if (z.size() != basis.size()) throw InputError("fixed-entry vector length mismatch");
  const Eigen::Index row = index_set.pairs.front().first;
  for (std::size_t i = 0; i < index_set.pairs.size(); ++i)
    if (index_set.pairs[i] != std::make_pair(row, static_cast<Eigen::Index>(i)))
      throw InputError("index set is not of the form {(k, i)}");
  return basis.matrix().transpose() * z / *index_set.constant_row_value;
}

}  // namespace cubewalk
