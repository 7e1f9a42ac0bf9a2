#pragma once

#include <utility>
#include <vector>

#include "mpma/complex.hpp"
#include "mpma/grid.hpp"
#include "mpma/matching.hpp"
#include "mpma/persistence.hpp"

// Data-parallel kernels. Each has a plain serial reference used by the tests
// and by the benchmark as a baseline.
namespace mpma::kernels {

// Caps the OpenMP team size; n <= 0 restores the runtime default.
void set_threads(int n);
int max_threads();

// Barcode of every grid line, indexed by line.
std::vector<Barcode> line_barcodes(const FilteredComplex& c, const LineGrid& g, const std::vector<int>& dims);
std::vector<Barcode> line_barcodes_serial(const FilteredComplex& c, const LineGrid& g, const std::vector<int>& dims);

// Compatibility matching for each (source line, target line) pair.
using LinePair = std::pair<int, int>;
std::vector<BarMatch> match_pairs(const std::vector<Barcode>& bcs, const std::vector<LinePair>& pairs, double delta,
                                  double tol);
std::vector<BarMatch> match_pairs_serial(const std::vector<Barcode>& bcs, const std::vector<LinePair>& pairs,
                                         double delta, double tol);

}  // namespace mpma::kernels
