#pragma once

#include <vector>

#include "mpma/core.hpp"

namespace mpma {

// A diagonal line {base + t·1}. Canonical basepoints have last coordinate 0.
struct DiagonalLine {
  Point base;
};

// Parameter of the smallest point on the line dominating x.
double push(const Point& base, const Point& x);
// Parameter of the largest point on the line dominated by x.
double pull(const Point& base, const Point& x);
Point point_at(const Point& base, double t);
// l∞ distance from x to the line.
double line_distance(const Point& base, const Point& x);
// Canonical basepoint of the line through x.
Point project(const Point& x);

bool consecutive(const Point& a, const Point& b, double delta, double tol = 1e-9);
bool comparable(const Point& a, const Point& b, double delta, double tol = 1e-9);

class LineGrid {
 public:
  Box box;        // region the lines fill
  double delta = 0;
  Point anchor;   // lattice origin, n-1 coordinates
  std::vector<int> k0;      // lattice index of the first layer, per axis
  std::vector<int> extent;  // number of layers, per axis
  std::vector<Point> lines; // basepoints; flat index with axis 0 fastest

  std::size_t size() const { return lines.size(); }
  std::size_t axes() const { return extent.size(); }

  std::vector<int> coords(int line) const;     // 0-based lattice coordinates
  int index(const std::vector<int>& c) const;  // -1 outside the lattice

  // Existing lines among line + δu, u ∈ {0,1}^{n-1}; the line itself comes first.
  std::vector<int> surrounding(int line) const;
  // Existing lines at line ± δe_i.
  std::vector<int> neighbours(int line) const;
  // Boustrophedon traversal, axis 0 fastest; consecutive entries differ by one lattice step.
  std::vector<int> snake_order() const;
};

// Throws std::invalid_argument if delta <= 0.
LineGrid build_grid(const Box& region, double delta);

}  // namespace mpma
