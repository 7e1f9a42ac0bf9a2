#include "mpma/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace mpma {

double push(const Point& base, const Point& x) {
  double t = -kInf;
  for (std::size_t i = 0; i < x.size(); ++i) t = std::max(t, x[i] - base[i]);
  return t;
}

double pull(const Point& base, const Point& x) {
  double t = kInf;
  for (std::size_t i = 0; i < x.size(); ++i) t = std::min(t, x[i] - base[i]);
  return t;
}

Point point_at(const Point& base, double t) {
  Point p(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) p[i] = std::isinf(t) ? t : base[i] + t;
  return p;
}

double line_distance(const Point& base, const Point& x) {
  double lo = kInf, hi = -kInf;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double v = x[i] - base[i];
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return (hi - lo) / 2;
}

Point project(const Point& x) {
  Point p(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) p[i] = x[i] - x.back();
  return p;
}

namespace {

// Offset b - a between canonical basepoints, plus the implicit 0 of the last axis.
std::pair<double, double> offset_range(const Point& a, const Point& b) {
  double lo = 0, hi = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    lo = std::min(lo, b[i] - a[i]);
    hi = std::max(hi, b[i] - a[i]);
  }
  return {lo, hi};
}

}  // namespace

bool consecutive(const Point& a, const Point& b, double delta, double tol) {
  // After re-alignment along 1 the offset is ±δ·1_S for a nonempty S among the first n-1 axes.
  bool any = false;
  int sign = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    double w = b[i] - a[i];
    if (std::fabs(w) <= tol) continue;
    int s = std::fabs(w - delta) <= tol ? 1 : std::fabs(w + delta) <= tol ? -1 : 0;
    if (s == 0 || (sign != 0 && s != sign)) return false;
    sign = s;
    any = true;
  }
  return any;
}

bool comparable(const Point& a, const Point& b, double delta, double tol) {
  auto [lo, hi] = offset_range(a, b);
  return hi - lo <= delta + tol;
}

std::vector<int> LineGrid::coords(int line) const {
  std::vector<int> c(extent.size());
  for (std::size_t i = 0; i < extent.size(); ++i) {
    c[i] = line % extent[i];
    line /= extent[i];
  }
  return c;
}

int LineGrid::index(const std::vector<int>& c) const {
  int idx = 0, stride = 1;
  for (std::size_t i = 0; i < extent.size(); ++i) {
    if (c[i] < 0 || c[i] >= extent[i]) return -1;
    idx += c[i] * stride;
    stride *= extent[i];
  }
  return idx;
}

std::vector<int> LineGrid::surrounding(int line) const {
  const std::size_t d = extent.size();
  auto c = coords(line);
  std::vector<int> out;
  for (unsigned u = 0; u < (1u << d); ++u) {
    auto cu = c;
    for (std::size_t i = 0; i < d; ++i)
      if (u >> i & 1u) ++cu[i];
    int j = index(cu);
    if (j >= 0) out.push_back(j);
  }
  return out;
}

std::vector<int> LineGrid::neighbours(int line) const {
  auto c = coords(line);
  std::vector<int> out;
  for (std::size_t i = 0; i < extent.size(); ++i)
    for (int s : {-1, 1}) {
      auto cu = c;
      cu[i] += s;
      int j = index(cu);
      if (j >= 0) out.push_back(j);
    }
  return out;
}

std::vector<int> LineGrid::snake_order() const {
  const std::size_t d = extent.size();
  std::vector<int> c(d, 0), dir(d, 1), out;
  out.reserve(lines.size());
  out.push_back(index(c));
  for (;;) {
    std::size_t a = 0;
    while (a < d && (c[a] + dir[a] < 0 || c[a] + dir[a] >= extent[a])) ++a;
    if (a == d) break;
    c[a] += dir[a];
    for (std::size_t b = 0; b < a; ++b) dir[b] = -dir[b];
    out.push_back(index(c));
  }
  return out;
}

LineGrid build_grid(const Box& region, double delta) {
  if (!(delta > 0) || !std::isfinite(delta)) throw std::invalid_argument("delta must be positive");
  const std::size_t n = region.dim();
  if (n == 0) throw std::invalid_argument("box must have at least one coordinate");
  LineGrid g;
  g.box = region;
  g.delta = delta;
  const std::size_t d = n - 1;
  g.anchor.resize(d);
  g.k0.resize(d);
  g.extent.resize(d);
  const double eps = 1e-9;
  for (std::size_t i = 0; i < d; ++i) {
    g.anchor[i] = region.low[i] - region.low[n - 1];
    double lo = region.low[i] - region.high[n - 1];
    double hi = region.high[i] - region.low[n - 1];
    int kmin = static_cast<int>(std::floor((lo - g.anchor[i]) / delta + eps)) - 1;
    int kmax = static_cast<int>(std::ceil((hi - g.anchor[i]) / delta - eps)) + 1;
    g.k0[i] = kmin;
    g.extent[i] = kmax - kmin + 1;
  }
  std::size_t total = 1;
  for (int e : g.extent) total *= static_cast<std::size_t>(e);
  g.lines.reserve(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    auto c = g.coords(static_cast<int>(flat));
    Point p(n, 0.0);
    for (std::size_t i = 0; i < d; ++i) p[i] = g.anchor[i] + (g.k0[i] + c[i]) * delta;
    g.lines.push_back(std::move(p));
  }
  return g;
}

}  // namespace mpma
