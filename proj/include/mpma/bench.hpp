#pragma once

#include <cstdint>
#include <vector>

#include "mpma/approximation.hpp"

namespace mpma {

// Triangulated side×side grid with two uniform random vertex functions,
// each extended to simplices by lower star.
FilteredComplex synthetic_lower_star(int side, std::uint64_t seed);
std::size_t synthetic_size(int side);
// Largest side whose complex has at most `n_simplices` simplices (0 if none).
int side_for_size(std::size_t n_simplices);

struct BenchRow {
  std::size_t n_simplices = 0;
  std::size_t n_lines = 0;
  double seconds = 0;
};

BenchRow bench_once(const FilteredComplex& c, double delta, Matcher matcher, const std::vector<int>& dims);

}  // namespace mpma
