#include "mpma/vineyard.hpp"

#include <algorithm>

namespace mpma {

Vineyard::Vineyard(const FilteredComplex& c, const Point& base, int line)
    : c_(&c), values_(push_values(c, base)), base_(base), line_(line) {
  m_ = reduce(c, order_simplices(c, values_));
  id_.assign(c.size(), -1);
  long next = 0;
  for (int s : m_.order)
    if (m_.low[s] < 0) id_[s] = next++;
}

Vineyard::Pair Vineyard::pair_of(int s) const {
  if (m_.low[s] >= 0) return {m_.low[s], s};
  return {s, m_.pivot[s]};
}

bool Vineyard::before(int a, int b) const {
  if (values_[a] != values_[b]) return values_[a] < values_[b];
  const int da = c_->simplices[a].dim, db = c_->simplices[b].dim;
  if (da != db) return da < db;
  return a < b;
}

// Re-establishes distinct lows among `cols`, always adding an earlier column to a later one.
void Vineyard::repair(std::vector<int> cols) {
  for (int c : cols)
    if (m_.low[c] >= 0 && m_.pivot[m_.low[c]] == c) m_.pivot[m_.low[c]] = -1;
  for (int c : cols) m_.low[c] = -1;
  while (!cols.empty()) {
    auto it = std::min_element(cols.begin(), cols.end(), [&](int a, int b) { return m_.pos[a] < m_.pos[b]; });
    int c = *it;
    cols.erase(it);
    int l = m_.compute_low(c);
    while (l >= 0) {
      int t = m_.pivot[l];
      if (t < 0) {
        m_.pivot[l] = c;
        break;
      }
      if (m_.pos[t] < m_.pos[c]) {
        m_.add_column(t, c);
        l = m_.compute_low(c);
      } else {
        m_.add_column(c, t);
        m_.pivot[l] = c;
        m_.low[t] = -1;
        cols.push_back(t);
        break;
      }
    }
    m_.low[c] = l;
  }
}

void Vineyard::transpose(int i) {
  const int sigma = m_.order[i], tau = m_.order[i + 1];
  if (c_->is_facet(sigma, tau))
    throw AlgorithmError("vineyard: cannot swap simplex " + std::to_string(sigma) + " past its coface " +
                         std::to_string(tau));
  const Pair ps = pair_of(sigma), pt = pair_of(tau);

  std::vector<int> touched;
  auto touch = [&](int s) {
    if (s >= 0 && std::find(touched.begin(), touched.end(), s) == touched.end()) touched.push_back(s);
  };
  if (std::binary_search(m_.V[tau].begin(), m_.V[tau].end(), sigma)) {
    m_.add_column(sigma, tau);
    touch(tau);
  }
  // Only columns whose low is sigma or tau can change their low under the row swap.
  touch(m_.pivot[sigma]);
  touch(m_.pivot[tau]);
  std::swap(m_.order[i], m_.order[i + 1]);
  m_.pos[sigma] = i + 1;
  m_.pos[tau] = i;
  repair(touched);

  const Pair qs = pair_of(sigma), qt = pair_of(tau);
  if ((qs == ps && qt == pt) || (qs == pt && qt == ps)) return;
  // A new pair inherits the id of the old pair sharing its partner outside {sigma, tau}.
  const Pair old[2] = {ps, pt};
  auto moved = [&](int s) { return s == sigma || s == tau; };
  long fresh[2] = {-1, -1};
  const Pair neu[2] = {qs, qt};
  for (int k = 0; k < 2; ++k) {
    const Pair& q = neu[k];
    for (const Pair& p : old) {
      const bool shares = moved(q.b) ? (!moved(q.d) && p.d == q.d && moved(p.b)) : (p.b == q.b);
      if (shares) {
        fresh[k] = id_[p.b];
        break;
      }
    }
  }
  for (int k = 0; k < 2; ++k)
    if (fresh[k] < 0) throw AlgorithmError("vineyard: lost track of a bar identity");
  id_[qs.b] = fresh[0];
  id_[qt.b] = fresh[1];
}

long Vineyard::advance(const Point& base, int line, Schedule schedule) {
  base_ = base;
  line_ = line;
  values_ = push_values(*c_, base);
  long swaps = 0;
  const int n = static_cast<int>(m_.order.size());
  if (schedule == Schedule::insertion) {
    for (int j = 1; j < n; ++j)
      for (int k = j; k > 0 && before(m_.order[k], m_.order[k - 1]); --k) {
        transpose(k - 1);
        ++swaps;
      }
  } else {
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (int i = 0; i + 1 < n; ++i)
        if (before(m_.order[i + 1], m_.order[i])) {
          transpose(i);
          ++swaps;
          dirty = true;
        }
    }
  }
  return swaps;
}

Barcode Vineyard::barcode(const std::vector<int>& dims) const {
  Barcode bc = mpma::barcode(*c_, m_, values_, base_, line_, dims);
  for (auto& b : bc.bars) b.id = id_[b.column_id];
  return bc;
}

AdvanceResult advance(Vineyard& v, const Point& base, int line, const std::vector<int>& dims, Schedule schedule) {
  Barcode before = v.barcode(dims);
  AdvanceResult r;
  r.transpositions = v.advance(base, line, schedule);
  r.matching = match_by_id(before, v.barcode(dims));
  return r;
}

}  // namespace mpma
