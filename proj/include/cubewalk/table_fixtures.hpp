#pragma once

#include <vector>

#include "cubewalk/pst_analyzer.hpp"
#include "cubewalk/spectral_engine.hpp"

namespace cubewalk {

/// Reference row: weights, eigenvalues and transfer pairs with 1-based labels.
/// Periodic rows list every vertex paired with itself.
struct TableRow {
  int id;
  std::vector<std::int64_t> weights;
  std::vector<std::int64_t> eigenvalues;
  std::vector<VertexPair> pairs_one_based;
};

/// The nine published reference rows (d = 2, 2, 3, 3, 3, 4, 4, 4, 5).
const std::vector<TableRow>& reference_table();

IntVector to_int_vector(const std::vector<std::int64_t>& v);

}  // namespace cubewalk
