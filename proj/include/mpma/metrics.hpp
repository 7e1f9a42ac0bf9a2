#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mpma/approximation.hpp"

namespace mpma {

// Throws std::invalid_argument on an empty set.
Box recthull(const std::vector<Point>& points);

// Closed parameter range {t : point_at(base, t) ∈ support}, if nonempty.
std::optional<std::pair<double, double>> interval_bar(const IntervalModule& I, const Point& base);

// Bars of each interval on one line. Zero-length intersections are dropped.
Barcode fibered_barcode(const std::vector<IntervalModule>& M, const Point& base, int line, const std::vector<int>& dims);

int dimension_at(const std::vector<IntervalModule>& M, const Point& x);

struct Raster {
  Box box;
  int resolution = 0;
  std::vector<int> values;  // axis 0 fastest

  Point center(std::size_t flat) const;
};

Raster rasterize(const std::vector<IntervalModule>& M, const Box& box, int resolution);
Raster rasterize_serial(const std::vector<IntervalModule>& M, const Box& box, int resolution);
double frobenius(const Raster& a, const Raster& b);

// Union bounding box of the finite corner coordinates, inflated by the larger module's diameter.
Box default_probe(const std::vector<IntervalModule>& a, const std::vector<IntervalModule>& b);

// Diagonal lines through the probe lattice probe.low + resolution·ℤⁿ.
std::vector<Point> probe_lines(const Box& probe, double resolution);

// Per probe line, the bar of I clipped to the probe box and snapped inward to
// lattice parameters (NaN pair when empty).
using ClippedBars = std::vector<std::pair<double, double>>;
ClippedBars probe_bars(const IntervalModule& I, const Box& probe, const std::vector<Point>& lines, double resolution);
ClippedBars probe_bars_serial(const IntervalModule& I, const Box& probe, const std::vector<Point>& lines,
                              double resolution);

// Smallest ε on {0, r, 2r, …} for which the shift morphisms between the two
// indicator modules satisfy both triangle identities on the probe lines.
// A module with no intervals is the zero module.
double estimate_interleaving(const IntervalModule& a, const IntervalModule& b, const Box& probe, double resolution);
double estimate_interleaving_zero(const IntervalModule& a, const Box& probe, double resolution);
// Module level: largest one-parameter bottleneck distance over the probe lines.
double estimate_interleaving(const std::vector<IntervalModule>& a, const std::vector<IntervalModule>& b,
                             const Box& probe, double resolution);

// Pointwise check of the triangle identities at the probe-grid points.
bool triangle_identities_hold(const IntervalModule& a, const IntervalModule& b, double eps, const Box& probe,
                              double resolution);

double bottleneck_estimate(const std::vector<IntervalModule>& a, const std::vector<IntervalModule>& b, const Box& probe,
                           double resolution);

// Bottleneck value of the square-or-padded cost problem: cost[i][j] for pairs,
// to_zero_a[i] / to_zero_b[j] for leaving a summand unmatched.
double bottleneck_assignment(const std::vector<std::vector<double>>& cost, const std::vector<double>& to_zero_a,
                             const std::vector<double>& to_zero_b);

}  // namespace mpma
