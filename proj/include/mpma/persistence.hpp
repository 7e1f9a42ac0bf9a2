#pragma once

#include <vector>

#include "mpma/complex.hpp"
#include "mpma/grid.hpp"

namespace mpma {

struct Bar {
  int line = -1;
  int hom_dim = 0;
  double birth_t = 0, death_t = kInf;
  Point birth_point, death_point;
  int column_id = -1;      // simplex creating the class
  int death_simplex = -1;  // simplex killing it, -1 when essential
  long id = -1;            // vineyard identity; -1 outside vineyard runs

  double length() const { return linf(birth_point, death_point); }
};

struct Barcode {
  int line = -1;
  std::vector<Bar> bars;
};

// Push value of every simplex onto the line.
std::vector<double> push_values(const FilteredComplex& c, const Point& base);
// Simplex ids sorted by (value, dim, id).
std::vector<int> order_simplices(const FilteredComplex& c, const std::vector<double>& values);

// R = D·V over F2. Columns are sorted lists of simplex ids and are indexed by
// simplex id, so swapping two rows is a change of `pos` only.
struct ReducedMatrix {
  std::vector<int> order;              // position -> simplex
  std::vector<int> pos;                // simplex -> position
  std::vector<std::vector<int>> R, V;  // per column simplex
  std::vector<int> low;                // column simplex -> lowest row simplex, or -1
  std::vector<int> pivot;              // row simplex -> column whose low it is, or -1

  // 'D' if the column is nonzero, 'B' if the simplex is some column's low, else 'E'.
  char tag(int s) const { return low[s] >= 0 ? 'D' : pivot[s] >= 0 ? 'B' : 'E'; }
  int compute_low(int s) const;
  void add_column(int from, int to);  // column `to` += column `from`, in R and V
};

ReducedMatrix reduce(const FilteredComplex& c, const std::vector<int>& order);

// Nontrivial bars in the requested degrees, in order of the creating simplex.
Barcode barcode(const FilteredComplex& c, const ReducedMatrix& m, const std::vector<double>& values, const Point& base,
                int line, const std::vector<int>& dims);

// Convenience: order, reduce and read the barcode on one line.
Barcode line_barcode(const FilteredComplex& c, const Point& base, int line, const std::vector<int>& dims);

// Column symmetric difference: a ^= b, both sorted.
void xor_into(std::vector<int>& a, const std::vector<int>& b);

}  // namespace mpma
