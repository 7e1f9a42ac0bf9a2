#include "mpma/persistence.hpp"

#include <algorithm>
#include <numeric>

namespace mpma {

std::vector<double> push_values(const FilteredComplex& c, const Point& base) {
  std::vector<double> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = push(base, c.simplices[i].grade);
  return v;
}

std::vector<int> order_simplices(const FilteredComplex& c, const std::vector<double>& values) {
  std::vector<int> order(c.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (values[a] != values[b]) return values[a] < values[b];
    if (c.simplices[a].dim != c.simplices[b].dim) return c.simplices[a].dim < c.simplices[b].dim;
    return a < b;
  });
  return order;
}

void xor_into(std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  a.swap(out);
}

int ReducedMatrix::compute_low(int s) const {
  int best = -1;
  for (int r : R[s])
    if (best < 0 || pos[r] > pos[best]) best = r;
  return best;
}

void ReducedMatrix::add_column(int from, int to) {
  xor_into(R[to], R[from]);
  xor_into(V[to], V[from]);
}

ReducedMatrix reduce(const FilteredComplex& c, const std::vector<int>& order) {
  const std::size_t n = c.size();
  ReducedMatrix m;
  m.order = order;
  m.pos.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) m.pos[order[i]] = static_cast<int>(i);
  m.R.resize(n);
  m.V.resize(n);
  m.low.assign(n, -1);
  m.pivot.assign(n, -1);
  for (int s : order) {
    m.R[s] = c.simplices[s].facets;
    m.V[s] = {s};
    int l = m.compute_low(s);
    while (l >= 0 && m.pivot[l] >= 0) {
      m.add_column(m.pivot[l], s);
      l = m.compute_low(s);
    }
    if (l >= 0) {
      m.low[s] = l;
      m.pivot[l] = s;
    }
  }
  return m;
}

Barcode barcode(const FilteredComplex& c, const ReducedMatrix& m, const std::vector<double>& values, const Point& base,
                int line, const std::vector<int>& dims) {
  Barcode bc;
  bc.line = line;
  for (int s : m.order) {
    if (m.low[s] >= 0) continue;
    const int dim = c.simplices[s].dim;
    if (std::find(dims.begin(), dims.end(), dim) == dims.end()) continue;
    const int d = m.pivot[s];
    const double birth = values[s], death = d < 0 ? kInf : values[d];
    if (birth == death) continue;
    Bar b;
    b.line = line;
    b.hom_dim = dim;
    b.birth_t = birth;
    b.death_t = death;
    b.birth_point = point_at(base, birth);
    b.death_point = point_at(base, death);
    b.column_id = s;
    b.death_simplex = d;
    bc.bars.push_back(std::move(b));
  }
  return bc;
}

Barcode line_barcode(const FilteredComplex& c, const Point& base, int line, const std::vector<int>& dims) {
  auto values = push_values(c, base);
  auto m = reduce(c, order_simplices(c, values));
  return barcode(c, m, values, base, line, dims);
}

}  // namespace mpma
