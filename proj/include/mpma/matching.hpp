#pragma once

#include <vector>

#include "mpma/persistence.hpp"

namespace mpma {

// Partial injective map from source bars to target bars (indices into the barcodes).
struct BarMatch {
  std::vector<int> target;      // per source bar, -1 for the empty set
  std::vector<char> ambiguous;  // per source bar: several compatible partners existed
  bool ill_defined = false;     // some long source bar found no partner

  int ambiguity_count() const;
};

// R_{x,y} is empty or has a side of length 0 (∞ − ∞ counts as 0).
bool flat(const Point& x, const Point& y, double tol);
bool compatible(const Bar& a, const Bar& b, double tol);
bool compatible_with_empty(const Bar& b, double delta, double tol);
// l∞ displacement between matched endpoints.
double displacement(const Bar& a, const Bar& b);

BarMatch compatibility_match(const Barcode& source, const Barcode& target, double delta, double tol);

// Matching read off vineyard bar ids.
BarMatch match_by_id(const Barcode& source, const Barcode& target);

}  // namespace mpma
