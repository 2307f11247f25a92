#include "cubewalk/boolean_domain.hpp"

#include <string>

#include "cubewalk/errors.hpp"

namespace cubewalk {

namespace {

void require_same_dimension(const GroupElement& a, const GroupElement& b) {
  if (a.dimension() != b.dimension())
    throw InputError("group elements have different dimensions (" + std::to_string(a.dimension()) +
                     " vs " + std::to_string(b.dimension()) + ")");
}

}  // namespace

Index checked_order(int dimension) {
  if (dimension < 1 || dimension > kMaxDimension)
    throw InputError("dimension must lie in [1, " + std::to_string(kMaxDimension) + "], got " +
                     std::to_string(dimension));
  return Index{1} << dimension;
}

int dimension_of_length(std::size_t length) {
  if (length < 2 || !std::has_single_bit(length))
    throw InputError("length " + std::to_string(length) + " is not a power of two >= 2");
  const int d = std::countr_zero(length);
  checked_order(d);
  return d;
}

GroupElement::GroupElement(Index bits, int dimension) : bits_(bits), dimension_(dimension) {
  if (bits >= checked_order(dimension))
    throw InputError("bits " + std::to_string(bits) + " out of range for dimension " +
                     std::to_string(dimension));
}

std::string GroupElement::to_string() const {
  std::string s(static_cast<std::size_t>(dimension_), '0');
  for (int j = 0; j < dimension_; ++j)
    if (bit(j)) s[static_cast<std::size_t>(dimension_ - 1 - j)] = '1';
  return s;
}

int parity_inner(const GroupElement& a, const GroupElement& b) {
  require_same_dimension(a, b);
  return parity_inner(a.bits(), b.bits());
}

GroupElement operator^(const GroupElement& a, const GroupElement& b) {
  require_same_dimension(a, b);
  return GroupElement(a.bits() ^ b.bits(), a.dimension());
}

GroupElement xor_elements(const GroupElement& a, const GroupElement& b) { return a ^ b; }

int hadamard_sign(const GroupElement& i, const GroupElement& j) {
  require_same_dimension(i, j);
  return hadamard_sign(i.bits(), j.bits());
}

}  // namespace cubewalk
