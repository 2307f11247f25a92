#pragma once

#include <numbers>
#include <vector>

#include "cubewalk/boolean_domain.hpp"
#include "cubewalk/spectral_engine.hpp"

namespace cubewalk {

/// Transfer time shared by every integer-weighted cubelike graph.
inline constexpr double kTransferTime = std::numbers::pi / 2;

enum class PstKind { Periodic, PerfectStateTransfer };

struct VertexPair {
  Index u;
  Index v;
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Outcome of the classification at time pi/2. Periodic iff sigma is the
/// identity; otherwise `pairs` partitions the vertices into {u, u xor sigma}.
struct PstResult {
  GroupElement sigma;
  PstKind kind;
  std::vector<VertexPair> pairs;
  static constexpr double time = kTransferTime;

  /// Builds the result implied by sigma, pairs ascending by u with u < v.
  static PstResult from_sigma(const GroupElement& sigma);
};

/// Bit j of sigma is set iff (lambda[2^j] - lambda[0]) / 2 is odd. Every other
/// k is then checked against parity_inner(sigma, k).
GroupElement sigma_from_spectrum(const Spectrum& spectrum);

/// Bit j of sigma is the parity of the sum of z[l] over l with bit j set.
GroupElement sigma_from_weights(const WeightVector& z);

/// True iff ((lambda[k] - lambda[0]) / 2) mod 2 == parity_inner(s, k) for all k.
bool satisfies_phase_condition(const Spectrum& spectrum, const GroupElement& s);

/// Computes sigma by both routes, checks they agree, and enumerates the pairs.
PstResult classify(const WeightVector& z);

const char* to_string(PstKind kind);

}  // namespace cubewalk
