#include "cubewalk/walk_oracle.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "cubewalk/errors.hpp"

namespace cubewalk {

namespace {

using Complex = std::complex<double>;

Eigen::VectorXcd phases(const Spectrum& spectrum, double t) {
  const Index n = spectrum.size();
  Eigen::VectorXcd out(n);
  if (t == kTransferTime && spectrum.is_integral()) {
    static const Complex powers_of_i[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const IntVector& lambda = spectrum.integers();
    for (Index k = 0; k < n; ++k) out(k) = powers_of_i[((lambda(k) % 4) + 4) % 4];
    return out;
  }
  for (Index k = 0; k < n; ++k) out(k) = std::polar(1.0, t * spectrum[k]);
  return out;
}

double one_norm(const Eigen::MatrixXcd& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

}  // namespace

TransitionMatrix transition_spectral(const WeightVector& z, double t) {
  if (!std::isfinite(t)) throw InputError("time must be finite");
  if (z.dimension() > kMaxDenseDimension)
    throw ResourceError("dense transition matrix limited to dimension " +
                        std::to_string(kMaxDenseDimension));
  const Spectrum spectrum = eigenvalues_from_weights(z);
  const Index n = z.size();

  // U is Z_2^d-circulant: U[u][v] = g[u xor v] with g = H e^{it lambda} / n.
  Eigen::VectorXcd g = phases(spectrum, t);
  fwht_inplace(g);
  g /= static_cast<double>(n);

  TransitionMatrix out{t, Eigen::MatrixXcd(n, n)};
  for (Index v = 0; v < n; ++v)
    for (Index u = 0; u < n; ++u) out.u(u, v) = g(u ^ v);
  return out;
}

TransitionMatrix transition_taylor(const WeightedGraph& graph, double t) {
  if (!std::isfinite(t)) throw InputError("time must be finite");
  if (graph.dimension() > kMaxTaylorDimension)
    throw ResourceError("Taylor exponential limited to dimension " + std::to_string(kMaxTaylorDimension));
  const Eigen::Index n = graph.matrix().rows();
  Eigen::MatrixXcd m = graph.matrix().cast<Complex>() * Complex(0.0, t);

  const double norm = one_norm(m);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  m /= std::ldexp(1.0, squarings);

  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = (term * m / static_cast<double>(k)).eval();
    result += term;
    if (one_norm(term) <= 1e-17 * one_norm(result)) break;
  }
  for (int s = 0; s < squarings; ++s) result = (result * result).eval();
  return {t, std::move(result)};
}

double fidelity(const TransitionMatrix& u, Index from, Index to) {
  if (from >= u.size() || to >= u.size())
    throw InputError("vertex index out of range for order " + std::to_string(u.size()));
  return std::abs(u.u(to, from));
}

void check_claims(const TransitionMatrix& u, const PstResult& result, const std::string& route,
                  VerificationReport& report) {
  const Index n = u.size();
  if (result.sigma.order() != n) throw InputError("result dimension does not match transition matrix");
  const Index sigma = result.sigma.bits();
  for (Index from = 0; from < n; ++from) {
    const Index to = from ^ sigma;
    if (result.kind == PstKind::PerfectStateTransfer && to < from) continue;
    const double f = fidelity(u, from, to);
    double leakage = 0.0;
    for (Index w = 0; w < n; ++w)
      if (w != to) leakage = std::max(leakage, std::abs(u.u(w, from)));
    const bool ok = f >= kPstThreshold && leakage <= kLeakageThreshold;
    report.checks.push_back({route, from, to, f, leakage, ok});
    if (!ok) {
      std::ostringstream msg;
      msg.precision(17);
      msg << route << ": pair (" << from << ", " << to << ") fidelity " << f << ", leakage " << leakage;
      report.failures.push_back(msg.str());
    }
  }
}

VerificationReport verify_result(const WeightVector& z, const PstResult& result,
                                 const VerifyOptions& options) {
  if (result.sigma.dimension() != z.dimension())
    throw InputError("result dimension does not match weight vector");
  VerificationReport report;
  const TransitionMatrix spectral = transition_spectral(z, kTransferTime);
  check_claims(spectral, result, "spectral", report);
  if (options.use_taylor) {
    const TransitionMatrix taylor = transition_taylor(adjacency_from_weights(z), kTransferTime);
    check_claims(taylor, result, "taylor", report);
    report.route_discrepancy = (spectral.u - taylor.u).cwiseAbs().maxCoeff();
    if (report.route_discrepancy > options.route_tolerance) {
      std::ostringstream msg;
      msg << "routes disagree: max |U_spectral - U_taylor| = " << report.route_discrepancy;
      report.failures.push_back(msg.str());
    }
  }
  return report;
}

}  // namespace cubewalk
