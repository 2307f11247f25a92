#include "cubewalk/table_fixtures.hpp"

namespace cubewalk {

namespace {

std::vector<VertexPair> diagonal(Index n) {
  std::vector<VertexPair> out;
  for (Index u = 1; u <= n; ++u) out.push_back({u, u});
  return out;
}

}  // namespace

const std::vector<TableRow>& reference_table() {
  static const std::vector<TableRow> rows = {
      {1, {0, 1, -7, -10}, {-16, 2, 18, -4}, {{1, 4}, {2, 3}}},
      {2, {0, 50, -10, -3}, {37, -57, 63, -43}, {{1, 4}, {2, 3}}},
      {3,
       {0, 3, 1, 4, -6, 0, -1, 10},
       {11, -23, -17, 5, 5, 11, 13, -5},
       {{1, 6}, {2, 5}, {3, 8}, {4, 7}}},
      {4, {0, 2, 3, 4, 5, 6, 5, 4}, {29, -3, -3, -3, -11, -3, -7, 1}, diagonal(8)},
      {5,
       {0, -72, 38, 93, 100, -86, -91, -42},
       {-60, 154, -56, 362, 178, -120, -350, -108},
       {{1, 6}, {2, 5}, {3, 8}, {4, 7}}},
      {6,
       {0, 5, -1, -4, -1, 5, 3, 2, -8, 10, -8, -4, -8, 1, 7, -1},
       {-2, -30, 10, -46, -18, -18, 38, 2, 20, 16, 8, 16, 0, 24, -16, -4},
       {{1, 9}, {2, 10}, {3, 11}, {4, 12}, {5, 13}, {6, 14}, {7, 15}, {8, 16}}},
      {7,
       {0, -83, -80, -35, 65, 64, -31, -50, 94, 5, 97, -60, -92, -25, -5, 24},
       {-112, 208, 168, 4, -12, 360, 20, 116, -188, -92, 316, 216, -480, -324, -376, 176},
       diagonal(16)},
      {8,
       {0, -30, 99, 5, 46, -85, -19, 100, 83, -10, -43, -4, 59, 60, 29, 22},
       {312, 196, -66, 310, -112, 160, 38, -174, -80, 76, -442, 62, 176, 64, -66, -454},
       {{1, 3}, {2, 4}, {5, 7}, {6, 8}, {9, 11}, {10, 12}, {13, 15}, {14, 16}}},
      {9,
       {0, -10, -5, 0, -7, -7, -5, 2, -1, -3, -3, -9, -7, 3, 6, -8,
        -5, 5, 0, 4, 3, 9, 2, 10, 1, 7, 8, -3, 8, -3, -2, -8},
       {-18, 4, 4, -22, -10, 4, 0, -2, 10, -64, -44, 58, -26, 20, 4, 2,
        -90, 16, -24, 10, -6, 28, 32, 58, -30, 36, 0, 42, 50, -4, -12, -26},
       {{1, 4}, {2, 3}, {5, 8}, {6, 7}, {9, 12}, {10, 11}, {13, 16}, {14, 15},
        {17, 20}, {18, 19}, {21, 24}, {22, 23}, {25, 28}, {26, 27}, {29, 32}, {30, 31}}},
  };
  return rows;
}

IntVector to_int_vector(const std::vector<std::int64_t>& v) {
  return Eigen::Map<const IntVector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace cubewalk
