#include <gtest/gtest.h>

#include <random>

#include "cubewalk/boolean_domain.hpp"
#include "cubewalk/eigenbasis_builder.hpp"
#include "cubewalk/errors.hpp"
#include "cubewalk/spectral_engine.hpp"
#include "cubewalk/table_fixtures.hpp"
#include "oracles.hpp"

namespace cubewalk {
namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

TEST(OrthogonalBasis, RejectsNonOrthogonal) {
  Eigen::Matrix2d m;
  m << 1, 0.1, 0, 1;
  EXPECT_THROW(OrthogonalBasis{m}, InputError);
  EXPECT_THROW(OrthogonalBasis(Eigen::MatrixXd(2, 3)), InputError);
}

TEST(SelectIndexSet, IdentityUsesDiagonalPairs) {
  const OrthogonalBasis basis(Eigen::MatrixXd::Identity(5, 5));
  const IndexSet set = select_index_set(basis);
  ASSERT_EQ(set.pairs.size(), 5U);
  for (Eigen::Index i = 0; i < 5; ++i) EXPECT_EQ(set.pairs[i], std::make_pair(i, i));
  EXPECT_FALSE(set.constant_row_value.has_value());
  EXPECT_EQ(build_q(basis, set), Eigen::MatrixXd::Identity(5, 5));
}

TEST(SelectIndexSet, HadamardBasisUsesConstantFirstRow) {
  for (int d = 1; d <= 6; ++d) {
    const OrthogonalBasis basis(hadamard_basis(d));
    const IndexSet set = select_index_set(basis);
    const Eigen::Index n = basis.size();
    ASSERT_EQ(set.pairs.size(), static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) EXPECT_EQ(set.pairs[i], std::make_pair(Eigen::Index{0}, i));
    ASSERT_TRUE(set.constant_row_value.has_value());
    EXPECT_NEAR(*set.constant_row_value, 1.0 / std::sqrt(double(n)), 1e-15);
    // Q = mu P
    EXPECT_LE(max_abs(build_q(basis, set) - *set.constant_row_value * basis.matrix()), 1e-15);
  }
}

TEST(SelectIndexSet, GreedyOnRandomBasisIsInvertible) {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 20; ++rep) {
    const OrthogonalBasis basis(oracle::random_orthogonal(4, rng));
    for (const IndexSet& set : {select_index_set(basis), select_index_set_greedy(basis)}) {
      ASSERT_EQ(set.pairs.size(), 4U);
      EXPECT_GT(std::abs(oracle::determinant(build_q(basis, set))), 1e-8);
    }
  }
}

TEST(SelectIndexSet, GreedyIsLexicographicWithRowBeforeColumn) {
  // Block-diagonal basis: the fast path is unavailable because every row has zeros.
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(4, 4);
  const double s = 1.0 / std::sqrt(2.0);
  p.topLeftCorner(2, 2) << s, s, s, -s;
  p.bottomRightCorner(2, 2) << s, s, s, -s;
  const OrthogonalBasis basis(p);
  const IndexSet set = select_index_set(basis);
  // (0,0) = [1/2,1/2,0,0]; (0,1) = [1/2,-1/2,0,0]; (1,1) dependent; (2,2), (2,3) fill the rest.
  const std::vector<std::pair<Eigen::Index, Eigen::Index>> expected = {{0, 0}, {0, 1}, {2, 2}, {2, 3}};
  EXPECT_EQ(set.pairs, expected);
  EXPECT_GT(std::abs(oracle::determinant(build_q(basis, set))), 1e-8);
}

TEST(BuildQ, RowsAreElementwiseProducts) {
  std::mt19937_64 rng(22);
  const OrthogonalBasis basis(oracle::random_orthogonal(6, rng));
  const IndexSet set = select_index_set_greedy(basis);
  const Eigen::MatrixXd q = build_q(basis, set);
  for (std::size_t j = 0; j < set.pairs.size(); ++j)
    for (Eigen::Index k = 0; k < 6; ++k)
      EXPECT_EQ(q(static_cast<Eigen::Index>(j), k),
                basis.matrix()(set.pairs[j].first, k) * basis.matrix()(set.pairs[j].second, k));
}

TEST(BuildQ, ValidatesIndexSet) {
  const OrthogonalBasis basis(Eigen::MatrixXd::Identity(3, 3));
  EXPECT_THROW(build_q(basis, IndexSet{{{0, 0}, {1, 1}}, {}}), InputError);
  EXPECT_THROW(build_q(basis, IndexSet{{{0, 0}, {1, 1}, {3, 0}}, {}}), InputError);
}

TEST(Reconstruct, C4FromHadamardBasis) {
  const OrthogonalBasis basis(hadamard_basis(2));
  const Eigen::Vector4d z(0, 1, 1, 0);
  const ReconstructionResult r = reconstruct(basis, select_index_set(basis), z);
  Eigen::Matrix4d c4;
  c4 << 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0;
  EXPECT_LE(max_abs(r.a - c4), 1e-12);
  EXPECT_LE(max_abs(r.x - Eigen::Vector4d(2, 0, 0, -2)), 1e-12);
}

TEST(Reconstruct, IdentityBasisGivesDiagonal) {
  const OrthogonalBasis basis(Eigen::MatrixXd::Identity(4, 4));
  const Eigen::Vector4d z(3, -1, 7, 0.5);
  const ReconstructionResult r = reconstruct(basis, select_index_set(basis), z);
  EXPECT_LE(max_abs(r.a - Eigen::MatrixXd(z.asDiagonal())), 1e-15);
}

TEST(Reconstruct, SingularIndexSetIsRejected) {
  const OrthogonalBasis basis(Eigen::MatrixXd::Identity(3, 3));
  const IndexSet repeated{{{0, 0}, {0, 0}, {1, 1}}, {}};
  EXPECT_THROW(reconstruct(basis, repeated, Eigen::Vector3d(1, 1, 1)), ReconstructionError);
}

TEST(Reconstruct, RandomBasisEigenResidualAndFixedEntries) {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 20; ++rep) {
    const OrthogonalBasis basis(oracle::random_orthogonal(6, rng));
    const IndexSet set = select_index_set(basis);
    Eigen::VectorXd z(6);
    std::uniform_int_distribution<int> dist(-20, 20);
    for (auto& x : z) x = dist(rng);
    const ReconstructionResult r = reconstruct(basis, set, z);
    const Eigen::MatrixXd& p = basis.matrix();
    const double scale = 1.0 + r.a.cwiseAbs().rowwise().sum().maxCoeff();
    for (Eigen::Index k = 0; k < 6; ++k)
      EXPECT_LE((r.a * p.col(k) - r.x(k) * p.col(k)).cwiseAbs().maxCoeff(), 1e-8 * scale);
    for (std::size_t j = 0; j < set.pairs.size(); ++j)
      EXPECT_NEAR(r.a(set.pairs[j].first, set.pairs[j].second), z(static_cast<Eigen::Index>(j)), 1e-8);
    EXPECT_EQ(r.a, r.a.transpose());
  }
}

TEST(Reconstruct, FullSystemHoldsForEveryEntry) {
  // Every entry a[i][j] equals sum_k x[k] P[i][k] P[j][k], not just the fixed ones.
  std::mt19937_64 rng(24);
  for (Eigen::Index n : {4, 8, 16}) {
    const OrthogonalBasis basis(oracle::random_orthogonal(n, rng));
    Eigen::VectorXd z = Eigen::VectorXd::LinSpaced(n, -3, 5);
    const ReconstructionResult r = reconstruct(basis, select_index_set_greedy(basis), z);
    const Eigen::MatrixXd& p = basis.matrix();
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        double y = 0;
        for (Eigen::Index k = 0; k < n; ++k) y += r.x(k) * p(i, k) * p(j, k);
        ASSERT_NEAR(r.a(i, j), y, 1e-9);
      }
  }
}

TEST(Reconstruct, AgreesWithSpectralEngineOnHadamardBasis) {
  std::mt19937_64 rng(25);
  for (int d = 1; d <= 5; ++d) {
    const OrthogonalBasis basis(hadamard_basis(d));
    const IndexSet set = select_index_set(basis);
    for (int rep = 0; rep < 10; ++rep) {
      const WeightVector z(to_int_vector(oracle::random_weights(d, rng)));
      const ReconstructionResult r = reconstruct(basis, set, z.values());
      EXPECT_LE(max_abs(r.a - adjacency_from_weights(z).matrix()), 1e-9);
      EXPECT_LE(max_abs(r.x - eigenvalues_from_weights(z).values()), 1e-9);
      EXPECT_LE(max_abs(eigenvalues_constant_row(basis, set, z.values()) - r.x), 1e-9);
    }
  }
}

}  // namespace
}  // namespace cubewalk
