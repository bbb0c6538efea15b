#include <array>

#include "hbent/census.hpp"
#include "hbent/errors.hpp"

namespace hbent {
namespace {

// Published reference counts, n = 8, d = 3. Not recomputed here.
constexpr std::array<PublishedCubicCount, 10> kCubicN8 = {{
    {24, 6'720, 1.54304e-12},
    {27, 13'440, 1.81992e-12},
    {28, 5'760, 7.53070e-13},
    {32, 6'720, 1.54304e-12},
    {34, 13'440, 6.27280e-12},
    {35, 19'200, 1.42564e-11},
    {36, 80'640, 1.02646e-10},
    {37, 67'200, 1.58246e-10},
    {39, 40'320, 4.11439e-10},
    {41, 40'320, 2.48073e-9},
}};

}  // namespace

std::span<const PublishedCubicCount> published_cubic_counts_n8() { return kCubicN8; }

std::vector<int> known_cubic_k_values(int n) {
  switch (n) {
    case 6:
      return {16};
    case 8:
      return {24, 27, 28, 32, 34, 35, 36, 37, 39, 41};
    case 10:
      return {39, 49, 53, 57, 58, 61, 65, 66, 69, 70, 72, 75, 78};
    case 12:
      return {60, 90, 100, 110, 130, 140, 150};
    case 16:
      return {168};
    default:
      throw UnknownData("no known cubic term counts for n=" + std::to_string(n));
  }
}

}  // namespace hbent
