#include "cubewalk/pst_analyzer.hpp"

#include <string>

#include "cubewalk/errors.hpp"

namespace cubewalk {

namespace {

// (lambda[k] - lambda[0]) / 2, mod 2. Requires the difference to be even.
int half_difference_parity(const IntVector& lambda, Index k) {
  const std::int64_t diff = lambda(k) - lambda(0);
  if (diff & 1)
    throw ParityError("eigenvalue difference lambda[" + std::to_string(k) + "] - lambda[0] = " +
                      std::to_string(diff) + " is odd");
  return static_cast<int>((diff >> 1) & 1);
}

}  // namespace

PstResult PstResult::from_sigma(const GroupElement& sigma) {
  PstResult out{sigma, sigma.is_identity() ? PstKind::Periodic : PstKind::PerfectStateTransfer, {}};
  if (out.kind == PstKind::Periodic) return out;
  const Index n = sigma.order();
  out.pairs.reserve(n / 2);
  for (Index u = 0; u < n; ++u) {
    const Index v = u ^ sigma.bits();
    if (u < v) out.pairs.push_back({u, v});
  }
  return out;
}

GroupElement sigma_from_spectrum(const Spectrum& spectrum) {
  if (!spectrum.is_integral()) throw DomainError("sigma needs an integer spectrum");
  const IntVector& lambda = spectrum.integers();
  const int d = spectrum.dimension();
  Index bits = 0;
  for (int j = 0; j < d; ++j)
    if (half_difference_parity(lambda, Index{1} << j)) bits |= Index{1} << j;

  for (Index k = 0; k < spectrum.size(); ++k) {
    if (half_difference_parity(lambda, k) != parity_inner(bits, k))
      throw ConsistencyError("spectrum contradicts sigma = " + std::to_string(bits) + " at k = " +
                             std::to_string(k) + "; it does not come from integer weights");
  }
  return GroupElement(bits, d);
}

GroupElement sigma_from_weights(const WeightVector& z) {
  const IntVector& w = z.integers();
  const int d = z.dimension();
  Index bits = 0;
  for (int j = 0; j < d; ++j) {
    std::int64_t odd = 0;
    for (Index l = 0; l < z.size(); ++l)
      if ((l >> j) & 1U) odd ^= w(l) & 1;
    if (odd) bits |= Index{1} << j;
  }
  return GroupElement(bits, d);
}

bool satisfies_phase_condition(const Spectrum& spectrum, const GroupElement& s) {
  if (s.dimension() != spectrum.dimension()) throw InputError("dimension mismatch");
  const IntVector& lambda = spectrum.integers();
  for (Index k = 0; k < spectrum.size(); ++k)
    if (half_difference_parity(lambda, k) != parity_inner(s.bits(), k)) return false;
  return true;
}

PstResult classify(const WeightVector& z) {
  if (!z.is_integral()) throw DomainError("classification needs integer weights");
  const GroupElement from_spectrum = sigma_from_spectrum(eigenvalues_from_weights(z));
  const GroupElement from_weights = sigma_from_weights(z);
  if (from_spectrum != from_weights)
    throw ConsistencyError("sigma routes disagree: spectrum gives " + from_spectrum.to_string() +
                           ", weights give " + from_weights.to_string());
  return PstResult::from_sigma(from_spectrum);
}

const char* to_string(PstKind kind) {
  switch (kind) {
    case PstKind::Periodic:
      return "periodic";
    case PstKind::PerfectStateTransfer:
      return "perfect_state_transfer";
  }
  return "unknown";
}

}  // namespace cubewalk
