#pragma once

#include <array>
#include <utility>

namespace dilation::data {

extern const int kConstructionDataVersion;
extern const std::array<std::pair<int, int>, 20> kS23Diagonals;
extern const std::array<std::pair<int, int>, 19> kHex13Degree3Edges;

}  // namespace dilation::data
