#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "cubewalk/errors.hpp"
#include "cubewalk/table_fixtures.hpp"
#include "cubewalk/walk_oracle.hpp"
#include "oracles.hpp"

namespace cubewalk {
namespace {

using Complex = std::complex<double>;

WeightVector wv(std::initializer_list<std::int64_t> v) {
  return WeightVector(to_int_vector(std::vector<std::int64_t>(v)));
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

Eigen::MatrixXcd antidiagonal_minus_one(Index n) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, n - 1 - i) = -1.0;
  return m;
}

TEST(TransitionSpectral, C4AtHalfPi) {
  const TransitionMatrix u = transition_spectral(wv({0, 1, 1, 0}), kTransferTime);
  EXPECT_LE(max_abs(u.u - antidiagonal_minus_one(4)), 1e-12);
  EXPECT_DOUBLE_EQ(fidelity(u, 0, 3), 1.0);
}

TEST(TransitionSpectral, IdentityAtTimeZero) {
  std::mt19937_64 rng(41);
  const TransitionMatrix u = transition_spectral(WeightVector(to_int_vector(oracle::random_weights(4, rng))), 0.0);
  EXPECT_LE(max_abs(u.u - Eigen::MatrixXcd::Identity(16, 16)), 1e-15);
  for (Index v = 0; v < 16; ++v) EXPECT_DOUBLE_EQ(fidelity(u, v, v), 1.0);
}

TEST(TransitionSpectral, TwoVertexClosedForm) {
  for (double t : {kTransferTime, 0.3, 1.7}) {
    const TransitionMatrix u = transition_spectral(wv({2, 3}), t);
    EXPECT_LE(max_abs(u.u - oracle::two_vertex_walk(2, 3, t)), 1e-14);
  }
  const TransitionMatrix k2 = transition_spectral(wv({0, 1}), kTransferTime);
  EXPECT_NEAR(std::abs(k2.u(0, 1)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(k2.u(0, 0)), 0.0, 1e-15);
}

TEST(TransitionSpectral, RealWeights) {
  Eigen::VectorXd z(2);
  z << 0.5, 0.75;
  const TransitionMatrix u = transition_spectral(WeightVector(z), 1.1);
  EXPECT_LE(max_abs(u.u - oracle::two_vertex_walk(0.5, 0.75, 1.1)), 1e-14);
}

TEST(TransitionSpectral, ResourceCap) {
  EXPECT_THROW(transition_spectral(WeightVector(IntVector(IntVector::Zero(std::int64_t{1} << 14))), 1.0), ResourceError);
}

TEST(TransitionTaylor, ZeroAndC4) {
  const TransitionMatrix zero = transition_taylor(WeightedGraph(Eigen::MatrixXd::Zero(8, 8)), 2.5);
  EXPECT_LE(max_abs(zero.u - Eigen::MatrixXcd::Identity(8, 8)), 1e-15);
  const TransitionMatrix c4 = transition_taylor(adjacency_from_weights(wv({0, 1, 1, 0})), kTransferTime);
  EXPECT_LE(max_abs(c4.u - antidiagonal_minus_one(4)), 1e-12);
}

TEST(TransitionTaylor, TwoVertexClosedForm) {
  for (double t : {0.3, 1.7, 25.0}) {
    const TransitionMatrix u = transition_taylor(adjacency_from_weights(wv({-4, 7})), t);
    EXPECT_LE(max_abs(u.u - oracle::two_vertex_walk(-4, 7, t)), 1e-10);
  }
}

TEST(TransitionTaylor, ResourceCap) {
  EXPECT_THROW(transition_taylor(adjacency_from_weights(WeightVector(IntVector(IntVector::Zero(2048)))), 1.0), ResourceError);
}

TEST(TransitionRoutes, AgreeOnRandomWeights) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int rep = 0; rep < 30; ++rep) {
    const WeightVector z(to_int_vector(oracle::random_weights(dim(rng), rng)));
    for (double t : {kTransferTime, 0.3, 1.7}) {
      const TransitionMatrix a = transition_spectral(z, t);
      const TransitionMatrix b = transition_taylor(adjacency_from_weights(z), t);
      ASSERT_LE(max_abs(a.u - b.u), 1e-8);
    }
  }
}

TEST(TransitionMatrix, UnitarySymmetricAndComposes) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> time(0, 2 * std::numbers::pi);
  for (int d = 1; d <= 6; ++d) {
    for (int rep = 0; rep < 5; ++rep) {
      const WeightVector z(to_int_vector(oracle::random_weights(d, rng)));
      const double t1 = time(rng), t2 = time(rng);
      const TransitionMatrix u1 = transition_spectral(z, t1);
      const TransitionMatrix u2 = transition_spectral(z, t2);
      const TransitionMatrix u12 = transition_spectral(z, t1 + t2);
      const Index n = z.size();
      ASSERT_LE(max_abs(u1.u * u1.u.adjoint() - Eigen::MatrixXcd::Identity(n, n)), 1e-9);
      ASSERT_LE(max_abs(u1.u - u1.u.transpose()), 1e-9);
      ASSERT_LE(max_abs(u1.u * u2.u - u12.u), 1e-8);
      for (Index u = 0; u < n; ++u) {
        ASSERT_NEAR(u1.u.col(u).squaredNorm(), 1.0, 1e-9);
        for (Index v = 0; v < n; ++v) ASSERT_EQ(fidelity(u1, u, v), fidelity(u1, v, u));
      }
    }
  }
}

TEST(TransitionMatrix, TransferThenReturnAtTwiceTheTime) {
  for (const TableRow& row : reference_table()) {
    const WeightVector z(to_int_vector(row.weights));
    const Index sigma = classify(z).sigma.bits();
    const TransitionMatrix once = transition_spectral(z, kTransferTime);
    const TransitionMatrix twice = transition_spectral(z, 2 * kTransferTime);
    for (Index u = 0; u < z.size(); ++u) {
      ASSERT_GE(fidelity(once, u, u ^ sigma), kPstThreshold);
      EXPECT_NEAR(fidelity(twice, u, u), 1.0, 1e-8);
    }
  }
}

TEST(Fidelity, IndexOutOfRange) {
  const TransitionMatrix u = transition_spectral(wv({0, 1, 1, 0}), 1.0);
  EXPECT_THROW(fidelity(u, 4, 0), InputError);
}

TEST(Fidelity, TableRow5) {
  const TransitionMatrix u = transition_spectral(wv({0, -72, 38, 93, 100, -86, -91, -42}), kTransferTime);
  EXPECT_NEAR(fidelity(u, 0, 5), 1.0, 1e-12);
}

TEST(VerifyResult, AllTableRowsVerify) {
  for (const TableRow& row : reference_table()) {
    const WeightVector z(to_int_vector(row.weights));
    const VerificationReport report = verify_result(z, classify(z));
    EXPECT_TRUE(report.passed()) << "row " << row.id;
    EXPECT_GE(report.route_discrepancy, 0.0);
    EXPECT_LE(report.route_discrepancy, 1e-8);
  }
}

TEST(VerifyResult, CorruptedSigmaFails) {
  for (const TableRow& row : reference_table()) {
    const WeightVector z(to_int_vector(row.weights));
    const PstResult good = classify(z);
    for (int j = 0; j < z.dimension(); ++j) {
      const PstResult bad = PstResult::from_sigma(GroupElement(good.sigma.bits() ^ (Index{1} << j), z.dimension()));
      const VerificationReport report = verify_result(z, bad);
      EXPECT_FALSE(report.passed()) << "row " << row.id << " bit " << j;
    }
  }
}

TEST(VerifyResult, LoopsOnlyAddAGlobalPhase) {
  const WeightVector z = wv({5, 1, -7, -10});
  const VerificationReport report = verify_result(z, classify(z));
  EXPECT_TRUE(report.passed());
  const TransitionMatrix looped = transition_spectral(z, 0.9);
  const TransitionMatrix plain = transition_spectral(z.with_loop_weight(0), 0.9);
  EXPECT_LE(max_abs(looped.u - std::polar(1.0, 5 * 0.9) * plain.u), 1e-12);
}

TEST(VerifyResult, SpectralOnlyWhenTaylorDisabled) {
  const WeightVector z = wv({0, 1, 1, 0});
  const VerificationReport report = verify_result(z, classify(z), {.use_taylor = false});
  EXPECT_TRUE(report.passed());
  EXPECT_LT(report.route_discrepancy, 0.0);
  EXPECT_EQ(report.checks.size(), 2U);
}

}  // namespace
}  // namespace cubewalk
