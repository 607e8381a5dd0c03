// Frozen edge sets for the figure-only constructions. Both were produced
// once by the repository's own searches and are re-verified by the
// constructors in constructions.cpp and by the test suite; the JSON copies
// under data/ are generated from these tables.
//
//   s23: first triangulation, in branch-and-bound order, among all optima
//        in which both (10,21) and (6,18) attain the maximum ratio
//   hex13 degree 3: falsify_degree_bound(hex13(), 3, 1 + sqrt(3), 20000, 2)

#include "constructions_data.hpp"

namespace dilation::data {

const int kConstructionDataVersion = 1;

const std::array<std::pair<int, int>, 20> kS23Diagonals = {{
    {0, 8},  {0, 16}, {0, 20}, {0, 21}, {1, 8},  {2, 8},  {3, 8},  {4, 8},  {5, 8},  {6, 8},
    {8, 10}, {8, 11}, {8, 13}, {8, 16}, {11, 13}, {13, 16}, {14, 16}, {16, 18}, {16, 19}, {16, 20},
}};

const std::array<std::pair<int, int>, 19> kHex13Degree3Edges = {{
    {0, 5},  {0, 9},  {0, 11}, {1, 2},  {1, 3},  {1, 11}, {2, 4},  {2, 12}, {3, 4},  {3, 5},
    {5, 6},  {6, 7},  {6, 8},  {7, 8},  {7, 9},  {8, 10}, {9, 10}, {10, 12}, {11, 12},
}};

}  // namespace dilation::data
