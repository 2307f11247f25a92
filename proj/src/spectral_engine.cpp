#include "cubewalk/spectral_engine.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace cubewalk {

namespace {

constexpr double kMaxExactDouble = 9007199254740992.0;  // 2^53
constexpr double kCirculantTolerance = 1e-9;

std::optional<IntVector> exact_copy(const Eigen::VectorXd& v) {
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double x = v(i);
    if (!std::isfinite(x) || std::trunc(x) != x || std::abs(x) > kMaxExactDouble) return std::nullopt;
    out(i) = static_cast<std::int64_t>(x);
  }
  return out;
}

void require_finite(const Eigen::VectorXd& v, const char* what) {
  if (!v.allFinite()) throw InputError(std::string(what) + " contains non-finite entries");
}

}  // namespace

WeightVector::WeightVector(IntVector z)
    : dimension_(dimension_of_length(static_cast<std::size_t>(z.size()))),
      values_(z.cast<double>()),
      exact_(std::move(z)) {}

WeightVector::WeightVector(const Eigen::VectorXd& z)
    : dimension_(dimension_of_length(static_cast<std::size_t>(z.size()))), values_(z) {
  require_finite(z, "weight vector");
  exact_ = exact_copy(z);
}

const IntVector& WeightVector::integers() const {
  if (!exact_) throw DomainError("weight vector is not integral");
  return *exact_;
}

WeightVector WeightVector::with_loop_weight(double loop) const {
  Eigen::VectorXd z = values_;
  z(0) = loop;
  if (exact_ && std::trunc(loop) == loop) {
    IntVector zi = *exact_;
    zi(0) = static_cast<std::int64_t>(loop);
    return WeightVector(std::move(zi));
  }
  return WeightVector(z);
}

Spectrum::Spectrum(IntVector lambda)
    : dimension_(dimension_of_length(static_cast<std::size_t>(lambda.size()))),
      values_(lambda.cast<double>()),
      exact_(std::move(lambda)) {}

Spectrum::Spectrum(const Eigen::VectorXd& lambda)
    : dimension_(dimension_of_length(static_cast<std::size_t>(lambda.size()))), values_(lambda) {
  require_finite(lambda, "spectrum");
  exact_ = exact_copy(lambda);
}

const IntVector& Spectrum::integers() const {
  if (!exact_) throw DomainError("spectrum is not integral");
  return *exact_;
}

WeightedGraph::WeightedGraph(Eigen::MatrixXd a) : dimension_(0), a_(std::move(a)) {
  if (a_.rows() != a_.cols()) throw InputError("adjacency matrix must be square");
  dimension_ = dimension_of_length(static_cast<std::size_t>(a_.rows()));
  if (dimension_ > kMaxDenseDimension)
    throw ResourceError("dense adjacency limited to dimension " + std::to_string(kMaxDenseDimension));
  if (!a_.allFinite()) throw InputError("adjacency matrix contains non-finite entries");
  for (Eigen::Index j = 0; j < a_.cols(); ++j)
    for (Eigen::Index i = j + 1; i < a_.rows(); ++i)
      if (a_(i, j) != a_(j, i))
        throw InputError("adjacency matrix is not symmetric at (" + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
}

Spectrum eigenvalues_from_weights(const WeightVector& z) {
  if (z.is_integral()) return Spectrum(fwht(z.integers()));
  return Spectrum(Eigen::VectorXd(fwht(z.values())));
}

WeightedGraph adjacency_from_weights(const WeightVector& z) {
  if (z.dimension() > kMaxDenseDimension)
    throw ResourceError("dense adjacency limited to dimension " + std::to_string(kMaxDenseDimension));
  const Index n = z.size();
  Eigen::MatrixXd a(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) a(i, j) = z[i ^ j];
  return WeightedGraph(std::move(a));
}

WeightVector weights_from_adjacency(const WeightedGraph& graph) {
  const Eigen::MatrixXd& a = graph.matrix();
  const Index n = graph.size();
  const Eigen::VectorXd first = a.row(0).transpose();
  const bool exact = exact_copy(Eigen::Map<const Eigen::VectorXd>(a.data(), a.size())).has_value();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const double expected = first(i ^ j);
      const double got = a(i, j);
      const bool ok = exact ? got == expected : std::abs(got - expected) <= kCirculantTolerance;
      if (!ok)
        throw StructureError(i, j,
                             "matrix is not Z_2^d-circulant: a[" + std::to_string(i) + "][" +
                                 std::to_string(j) + "] = " + std::to_string(got) + " but a[0][" +
                                 std::to_string(i ^ j) + "] = " + std::to_string(expected));
    }
  }
  return WeightVector(first);
}

StructuralReport structural_report(const WeightVector& z) {
  StructuralReport report;
  report.loop_free = z[0] == 0.0;
  report.integral = z.is_integral();
  const Spectrum spectrum = eigenvalues_from_weights(z);
  report.trace = spectrum.values().sum();
  if (spectrum.is_integral()) {
    report.trace = static_cast<double>(spectrum.integers().sum());
    report.eigenvalue_parity = static_cast<int>(spectrum.integers()(0) & 1);
  }
  if (!report.integral) report.eigenvalue_parity.reset();
  return report;
}

}  // namespace cubewalk
