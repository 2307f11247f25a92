#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "cubewalk/pst_analyzer.hpp"
#include "cubewalk/spectral_engine.hpp"

namespace cubewalk {

/// Dimension cap of the scaling-and-squaring exponential.
inline constexpr int kMaxTaylorDimension = 10;

/// Fidelity at or above which perfect transfer is declared.
inline constexpr double kPstThreshold = 1.0 - 1e-9;
/// Largest modulus tolerated outside the claimed pair of a column.
inline constexpr double kLeakageThreshold = 1e-6;

/// U(t) = exp(i t A) for the continuous-time walk.
struct TransitionMatrix {
  double t = 0.0;
  Eigen::MatrixXcd u;

  Index size() const noexcept { return static_cast<Index>(u.rows()); }
};

/// Character-sum route: U[u][v] = (1/n) sum_k (-1)^{<u xor v|k>} exp(i t lambda[k]).
/// At t = pi/2 with integral spectrum the phases are the exact values i^(lambda mod 4).
TransitionMatrix transition_spectral(const WeightVector& z, double t);

/// Independent route: scaling and squaring with a truncated Taylor series of
/// exp(i t A), accurate to about 1e-10. Shares no code with transition_spectral.
TransitionMatrix transition_taylor(const WeightedGraph& graph, double t);

/// |U[v][u]|, amplitude of reaching v from u.
double fidelity(const TransitionMatrix& u, Index from, Index to);

struct PairCheck {
  std::string route;
  Index u;
  Index v;
  double fidelity;
  /// Largest modulus in column u outside row v.
  double leakage;
  bool passed;
};

struct VerificationReport {
  std::vector<PairCheck> checks;
  /// Max |U_spectral - U_taylor|; negative when the Taylor route was skipped.
  double route_discrepancy = -1.0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

struct VerifyOptions {
  /// Build U(pi/2) by the Taylor route as well (needs d <= kMaxTaylorDimension).
  bool use_taylor = true;
  /// Threshold for |U_spectral - U_taylor|.
  double route_tolerance = 1e-8;
};

/// Checks the claimed pairs (or the diagonal when periodic) of `result` on one
/// transition matrix. Appends to `report`.
void check_claims(const TransitionMatrix& u, const PstResult& result, const std::string& route,
                  VerificationReport& report);

/// Builds U(pi/2) by both routes and checks every claimed pair for fidelity
/// >= kPstThreshold and leakage <= kLeakageThreshold.
VerificationReport verify_result(const WeightVector& z, const PstResult& result,
                                 const VerifyOptions& options = {});

}  // namespace cubewalk
