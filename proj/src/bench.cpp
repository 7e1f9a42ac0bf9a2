#include "mpma/bench.hpp"

#include <chrono>
#include <random>

namespace mpma {

std::size_t synthetic_size(int side) {
  if (side < 1) return 0;
  const std::size_t m = static_cast<std::size_t>(side);
  return m * m + 2 * m * (m - 1) + (m - 1) * (m - 1) + 2 * (m - 1) * (m - 1);
}

int side_for_size(std::size_t n_simplices) {
  int side = 0;
  while (synthetic_size(side + 1) <= n_simplices) ++side;
  return side;
}

FilteredComplex synthetic_lower_star(int side, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int nv = side * side;
  std::vector<double> f(nv), g(nv);
  for (int v = 0; v < nv; ++v) {
    f[v] = unif(rng);
    g[v] = unif(rng);
  }
  ComplexBuilder b(1);
  auto at = [&](int i, int j) { return i * side + j; };
  auto grade = [&](std::initializer_list<int> vs) {
    double m = 0;
    for (int v : vs) m = std::max(m, f[v]);
    return Point{m};
  };
  for (int v = 0; v < nv; ++v) b.vertex({f[v]});
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      if (j + 1 < side) b.simplex({at(i, j), at(i, j + 1)}, grade({at(i, j), at(i, j + 1)}));
      if (i + 1 < side) b.simplex({at(i, j), at(i + 1, j)}, grade({at(i, j), at(i + 1, j)}));
      if (i + 1 < side && j + 1 < side) b.simplex({at(i, j), at(i + 1, j + 1)}, grade({at(i, j), at(i + 1, j + 1)}));
    }
  for (int i = 0; i + 1 < side; ++i)
    for (int j = 0; j + 1 < side; ++j) {
      int a = at(i, j), c = at(i + 1, j + 1);
      b.simplex({a, at(i, j + 1), c}, grade({a, at(i, j + 1), c}));
      b.simplex({a, at(i + 1, j), c}, grade({a, at(i + 1, j), c}));
    }
  std::map<int, double> second;
  for (int v = 0; v < nv; ++v) second[v] = g[v];
  return lower_star(b.complex(), second);
}

BenchRow bench_once(const FilteredComplex& c, double delta, Matcher matcher, const std::vector<int>& dims) {
  ApproxOptions opt;
  opt.delta = delta;
  opt.matcher = matcher;
  opt.dims = dims;
  opt.lenient = true;
  const auto t0 = std::chrono::steady_clock::now();
  ApproxModule M = approximate_module(c, c.grade_box(), opt);
  const auto t1 = std::chrono::steady_clock::now();
  return {c.size(), M.n_lines, std::chrono::duration<double>(t1 - t0).count()};
}

}  // namespace mpma
