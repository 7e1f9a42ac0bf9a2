#include "mpma/metrics.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mpma {

Box recthull(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("recthull of an empty set");
  Box b{points[0], points[0]};
  for (const auto& p : points)
    for (std::size_t i = 0; i < p.size(); ++i) {
      b.low[i] = std::min(b.low[i], p[i]);
      b.high[i] = std::max(b.high[i], p[i]);
    }
  return b;
}

std::optional<std::pair<double, double>> interval_bar(const IntervalModule& I, const Point& base) {
  double lo = kInf, hi = -kInf;
  for (const auto& c : I.births) lo = std::min(lo, push(base, c.coords));
  for (const auto& c : I.deaths) hi = std::max(hi, pull(base, c.coords));
  if (!(lo <= hi)) return std::nullopt;
  return std::make_pair(lo, hi);
}

Barcode fibered_barcode(const std::vector<IntervalModule>& M, const Point& base, int line, const std::vector<int>& dims) {
  Barcode bc;
  bc.line = line;
  for (std::size_t k = 0; k < M.size(); ++k) {
    if (std::find(dims.begin(), dims.end(), M[k].hom_dim) == dims.end()) continue;
    auto r = interval_bar(M[k], base);
    if (!r || r->first == r->second) continue;
    Bar b;
    b.line = line;
    b.hom_dim = M[k].hom_dim;
    b.birth_t = r->first;
    b.death_t = r->second;
    b.birth_point = point_at(base, r->first);
    b.death_point = point_at(base, r->second);
    b.column_id = static_cast<int>(k);
    bc.bars.push_back(std::move(b));
  }
  return bc;
}

int dimension_at(const std::vector<IntervalModule>& M, const Point& x) {
  int d = 0;
  for (const auto& I : M) d += support_contains(I, x);
  return d;
}

Point Raster::center(std::size_t flat) const {
  Point p(box.dim());
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::size_t k = flat % resolution;
    flat /= resolution;
    p[i] = box.low[i] + (static_cast<double>(k) + 0.5) * (box.high[i] - box.low[i]) / resolution;
  }
  return p;
}

namespace {

std::size_t pixel_count(const Box& box, int resolution) {
  if (resolution < 1) throw std::invalid_argument("raster resolution must be at least 1");
  std::size_t total = 1;
  for (std::size_t i = 0; i < box.dim(); ++i) total *= static_cast<std::size_t>(resolution);
  return total;
}

}  // namespace

Raster rasterize(const std::vector<IntervalModule>& M, const Box& box, int resolution) {
  Raster r{box, resolution, {}};
  const long total = static_cast<long>(pixel_count(box, resolution));
  r.values.assign(total, 0);
#pragma omp parallel for schedule(static)
  for (long p = 0; p < total; ++p) r.values[p] = dimension_at(M, r.center(static_cast<std::size_t>(p)));
  return r;
}

Raster rasterize_serial(const std::vector<IntervalModule>& M, const Box& box, int resolution) {
  Raster r{box, resolution, {}};
  const std::size_t total = pixel_count(box, resolution);
  r.values.reserve(total);
  for (std::size_t p = 0; p < total; ++p) r.values.push_back(dimension_at(M, r.center(p)));
  return r;
}

double frobenius(const Raster& a, const Raster& b) {
  if (a.values.size() != b.values.size()) throw std::invalid_argument("rasters differ in shape");
  double s = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    double d = a.values[i] - b.values[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Box default_probe(const std::vector<IntervalModule>& a, const std::vector<IntervalModule>& b) {
  auto finite_box = [](const std::vector<IntervalModule>& M, std::size_t n) {
    Box bx{Point(n, kInf), Point(n, -kInf)};
    for (const auto& I : M)
      for (const auto* cs : {&I.births, &I.deaths})
        for (const auto& c : *cs)
          for (std::size_t i = 0; i < n; ++i)
            if (std::isfinite(c.coords[i])) {
              bx.low[i] = std::min(bx.low[i], c.coords[i]);
              bx.high[i] = std::max(bx.high[i], c.coords[i]);
            }
    return bx;
  };
  std::size_t n = 0;
  for (const auto* M : {&a, &b})
    for (const auto& I : *M)
      if (!I.births.empty()) n = I.births[0].coords.size();
  if (n == 0) return Box{{0.0}, {1.0}};
  Box ba = finite_box(a, n), bb = finite_box(b, n);
  Box u{Point(n), Point(n)};
  double diam = 0;
  for (const Box* x : {&ba, &bb}) {
    double d = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (x->low[i] <= x->high[i]) d = std::max(d, x->high[i] - x->low[i]);
    diam = std::max(diam, d);
  }
  for (std::size_t i = 0; i < n; ++i) {
    u.low[i] = std::min(ba.low[i], bb.low[i]);
    u.high[i] = std::max(ba.high[i], bb.high[i]);
    if (u.low[i] > u.high[i]) u.low[i] = u.high[i] = 0;  // no finite coordinate on this axis
  }
  if (diam == 0) diam = 1;
  return u.expanded(diam);
}

std::vector<Point> probe_lines(const Box& probe, double resolution) {
  if (!(resolution > 0)) throw std::invalid_argument("probe resolution must be positive");
  const std::size_t n = probe.dim(), d = n - 1;
  // Diagonals through the lattice probe.low + rℤⁿ that meet the probe box.
  const int back = static_cast<int>(std::floor((probe.high[d] - probe.low[d]) / resolution + 1e-9));
  std::vector<double> start(d);
  std::vector<int> count(d);
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    start[i] = probe.low[i] - probe.low[d] - back * resolution;
    count[i] = static_cast<int>(std::floor((probe.high[i] - probe.low[i]) / resolution + 1e-9)) + 1 + back;
    total *= static_cast<std::size_t>(count[i]);
  }
  std::vector<Point> out;
  out.reserve(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    Point p(n, 0.0);
    std::size_t f = flat;
    for (std::size_t i = 0; i < d; ++i) {
      p[i] = start[i] + static_cast<double>(f % count[i]) * resolution;
      f /= count[i];
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();

// Bar of I on the line, clipped to the probe box and snapped inward to the
// probe lattice t ∈ probe.low[n-1] + rℤ.
std::pair<double, double> clipped_bar(const IntervalModule& I, const Box& probe, const Point& base, double r) {
  auto bar = interval_bar(I, base);
  if (!bar) return {kNaN, kNaN};
  const double t0 = probe.low.back();
  double s = std::max(bar->first, push(base, probe.low));
  double e = std::min(bar->second, pull(base, probe.high));
  s = t0 + r * std::ceil((s - t0) / r - 1e-9);
  e = t0 + r * std::floor((e - t0) / r + 1e-9);
  if (!(s <= e + 1e-12)) return {kNaN, kNaN};
  return {s, e};
}

bool empty_bar(const std::pair<double, double>& b) { return std::isnan(b.first); }

// Smallest grid value strictly above x, and the smallest at or above x.
double grid_above(double x, double r) { return r * (std::floor(x / r + 1e-9) + 1); }
double grid_at_least(double x, double r) { return x <= 0 ? 0 : r * std::ceil(x / r - 1e-9); }

// Smallest grid ε such that a and a shifted by 2ε both in the bar of `x` forces
// the middle into the bar of `y`.
double one_sided(const std::pair<double, double>& x, const std::pair<double, double>& y, double r) {
  if (empty_bar(x)) return 0;
  double by_length = grid_above((x.second - x.first) / 2, r);
  if (empty_bar(y)) return by_length;
  double need = std::max({y.first - x.first, x.second - y.second, 0.0});
  return std::min(by_length, grid_at_least(need, r));
}

double max_over_lines(const ClippedBars& a, const ClippedBars& b, double r) {
  double eps = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    eps = std::max({eps, one_sided(a[k], b[k], r), one_sided(b[k], a[k], r)});
  return eps;
}

}  // namespace

ClippedBars probe_bars(const IntervalModule& I, const Box& probe, const std::vector<Point>& lines, double resolution) {
  const long n = static_cast<long>(lines.size());
  ClippedBars out(n);
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) out[k] = clipped_bar(I, probe, lines[k], resolution);
  return out;
}

ClippedBars probe_bars_serial(const IntervalModule& I, const Box& probe, const std::vector<Point>& lines,
                              double resolution) {
  ClippedBars out;
  out.reserve(lines.size());
  for (const auto& l : lines) out.push_back(clipped_bar(I, probe, l, resolution));
  return out;
}

double estimate_interleaving(const IntervalModule& a, const IntervalModule& b, const Box& probe, double resolution) {
  auto lines = probe_lines(probe, resolution);
  return max_over_lines(probe_bars(a, probe, lines, resolution), probe_bars(b, probe, lines, resolution), resolution);
}

double estimate_interleaving_zero(const IntervalModule& a, const Box& probe, double resolution) {
  auto lines = probe_lines(probe, resolution);
  return max_over_lines(probe_bars(a, probe, lines, resolution), ClippedBars(lines.size(), {kNaN, kNaN}), resolution);
}

bool triangle_identities_hold(const IntervalModule& a, const IntervalModule& b, double eps, const Box& probe,
                              double resolution) {
  const std::size_t n = probe.dim();
  std::vector<int> count(n);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count[i] = static_cast<int>(std::floor((probe.high[i] - probe.low[i]) / resolution + 1e-9)) + 1;
    total *= static_cast<std::size_t>(count[i]);
  }
  auto shifted = [](Point x, double s) {
    for (auto& v : x) v += s;
    return x;
  };
  for (std::size_t flat = 0; flat < total; ++flat) {
    Point x(n);
    std::size_t f = flat;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = probe.low[i] + static_cast<double>(f % count[i]) * resolution;
      f /= count[i];
    }
    Point far = shifted(x, 2 * eps), mid = shifted(x, eps);
    if (!probe.contains(far, 1e-12)) continue;
    for (auto [p, q] : {std::pair{&a, &b}, std::pair{&b, &a}})
      if (support_contains(*p, x) && support_contains(*p, far) && !support_contains(*q, mid)) return false;
  }
  return true;
}

double bottleneck_assignment(const std::vector<std::vector<double>>& cost, const std::vector<double>& to_zero_a,
                             const std::vector<double>& to_zero_b) {
  const int m = static_cast<int>(to_zero_a.size()), k = static_cast<int>(to_zero_b.size());
  if (m == 0 && k == 0) return 0;
  std::vector<double> thresholds{0.0};
  for (const auto& row : cost) thresholds.insert(thresholds.end(), row.begin(), row.end());
  thresholds.insert(thresholds.end(), to_zero_a.begin(), to_zero_a.end());
  thresholds.insert(thresholds.end(), to_zero_b.begin(), to_zero_b.end());
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  // Left: m real + k dummies; right: k real + m dummies.
  const int size = m + k;
  auto allowed = [&](int u, int v, double th) {
    if (u < m && v < k) return cost[u][v] <= th;
    if (u < m) return v - k == u && to_zero_a[u] <= th;
    if (v < k) return u - m == v && to_zero_b[v] <= th;
    return true;
  };
  auto feasible = [&](double th) {
    std::vector<int> match_r(size, -1);
    for (int u = 0; u < size; ++u) {
      std::vector<char> seen(size, 0);
      std::function<bool(int)> augment = [&](int x) {
        for (int v = 0; v < size; ++v) {
          if (seen[v] || !allowed(x, v, th)) continue;
          seen[v] = 1;
          if (match_r[v] < 0 || augment(match_r[v])) {
            match_r[v] = x;
            return true;
          }
        }
        return false;
      };
      if (!augment(u)) return false;
    }
    return true;
  };
  std::size_t lo = 0, hi = thresholds.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (feasible(thresholds[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo < thresholds.size() ? thresholds[lo] : kInf;
}

double estimate_interleaving(const std::vector<IntervalModule>& a, const std::vector<IntervalModule>& b,
                             const Box& probe, double resolution) {
  auto lines = probe_lines(probe, resolution);
  std::vector<ClippedBars> pa, pb;
  for (const auto& I : a) pa.push_back(probe_bars(I, probe, lines, resolution));
  for (const auto& I : b) pb.push_back(probe_bars(I, probe, lines, resolution));
  const long nl = static_cast<long>(lines.size());
  std::vector<double> per_line(nl, 0.0);
#pragma omp parallel for schedule(dynamic, 64)
  for (long l = 0; l < nl; ++l) {
    std::vector<std::pair<double, double>> x, y;
    std::vector<int> dx, dy;
    for (std::size_t i = 0; i < pa.size(); ++i)
      if (!empty_bar(pa[i][l])) {
        x.push_back(pa[i][l]);
        dx.push_back(a[i].hom_dim);
      }
    for (std::size_t j = 0; j < pb.size(); ++j)
      if (!empty_bar(pb[j][l])) {
        y.push_back(pb[j][l]);
        dy.push_back(b[j].hom_dim);
      }
    std::vector<std::vector<double>> cost(x.size(), std::vector<double>(y.size()));
    std::vector<double> za, zb;
    for (std::size_t i = 0; i < x.size(); ++i) {
      za.push_back((x[i].second - x[i].first) / 2);
      for (std::size_t j = 0; j < y.size(); ++j)
        cost[i][j] = dx[i] != dy[j] ? kInf
                                    : std::max(std::fabs(x[i].first - y[j].first), std::fabs(x[i].second - y[j].second));
    }
    for (const auto& q : y) zb.push_back((q.second - q.first) / 2);
    per_line[l] = bottleneck_assignment(cost, za, zb);
  }
  double v = 0;
  for (double x : per_line) v = std::max(v, x);
  return grid_at_least(v, resolution);
}

double bottleneck_estimate(const std::vector<IntervalModule>& a, const std::vector<IntervalModule>& b, const Box& probe,
                           double resolution) {
  auto lines = probe_lines(probe, resolution);
  std::vector<ClippedBars> pa, pb;
  for (const auto& I : a) pa.push_back(probe_bars(I, probe, lines, resolution));
  for (const auto& I : b) pb.push_back(probe_bars(I, probe, lines, resolution));
  const ClippedBars none(lines.size(), {kNaN, kNaN});
  const long m = static_cast<long>(a.size()), k = static_cast<long>(b.size());
  std::vector<std::vector<double>> cost(m, std::vector<double>(k));
  std::vector<double> za(m), zb(k);
#pragma omp parallel for schedule(dynamic, 1)
  for (long e = 0; e < m * k; ++e) {
    const long i = e / k, j = e % k;
    cost[i][j] = a[i].hom_dim == b[j].hom_dim ? max_over_lines(pa[i], pb[j], resolution) : kInf;
  }
  for (long i = 0; i < m; ++i) za[i] = max_over_lines(pa[i], none, resolution);
  for (long j = 0; j < k; ++j) zb[j] = max_over_lines(pb[j], none, resolution);
  return bottleneck_assignment(cost, za, zb);
}

}  // namespace mpma
