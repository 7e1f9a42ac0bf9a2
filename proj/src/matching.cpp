#include "mpma/matching.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

namespace mpma {

int BarMatch::ambiguity_count() const {
  return static_cast<int>(std::count(ambiguous.begin(), ambiguous.end(), 1));
}

bool flat(const Point& x, const Point& y, double tol) {
  if (!leq(x, y, tol)) return true;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (same_value(x[i], y[i], tol)) return true;
  return false;
}

bool compatible(const Bar& a, const Bar& b, double tol) {
  return flat(a.birth_point, b.birth_point, tol) && flat(b.birth_point, a.birth_point, tol) &&
         flat(a.death_point, b.death_point, tol) && flat(b.death_point, a.death_point, tol);
}

bool compatible_with_empty(const Bar& b, double delta, double tol) {
  return std::isfinite(b.death_t) && b.length() <= 2 * delta + tol;
}

double displacement(const Bar& a, const Bar& b) {
  return std::max(linf(a.birth_point, b.birth_point), linf(a.death_point, b.death_point));
}

BarMatch compatibility_match(const Barcode& source, const Barcode& target, double delta, double tol) {
  const int ns = static_cast<int>(source.bars.size()), nt = static_cast<int>(target.bars.size());
  BarMatch m;
  m.target.assign(ns, -1);
  m.ambiguous.assign(ns, 0);
  std::vector<std::vector<int>> cand(ns);
  std::vector<int> indegree(nt, 0);
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < nt; ++j) {
      const Bar &a = source.bars[i], &b = target.bars[j];
      if (a.hom_dim == b.hom_dim && compatible(a, b, tol)) {
        cand[i].push_back(j);
        ++indegree[j];
      }
    }

  std::vector<char> taken(nt, 0);
  // Uncontested unique partners first.
  for (int i = 0; i < ns; ++i)
    if (cand[i].size() == 1 && indegree[cand[i][0]] == 1) {
      m.target[i] = cand[i][0];
      taken[cand[i][0]] = 1;
    }
  // Everything else: short bars without a unique partner go to the empty set,
  // long ones take the closest free partner and are flagged.
  std::vector<std::tuple<double, int, int>> edges;
  for (int i = 0; i < ns; ++i) {
    if (m.target[i] >= 0 || cand[i].empty()) continue;
    const bool short_bar = compatible_with_empty(source.bars[i], delta, tol);
    if (short_bar && cand[i].size() > 1) continue;
    if (cand[i].size() > 1 || indegree[cand[i][0]] > 1) m.ambiguous[i] = 1;
    for (int j : cand[i]) edges.emplace_back(displacement(source.bars[i], target.bars[j]), i, j);
  }
  std::sort(edges.begin(), edges.end());
  for (auto [d, i, j] : edges) {
    if (m.target[i] >= 0 || taken[j]) continue;
    m.target[i] = j;
    taken[j] = 1;
  }
  for (int i = 0; i < ns; ++i)
    if (m.target[i] < 0 && !compatible_with_empty(source.bars[i], delta, tol)) m.ill_defined = true;
  return m;
}

BarMatch match_by_id(const Barcode& source, const Barcode& target) {
  std::unordered_map<long, int> where;
  for (int j = 0; j < static_cast<int>(target.bars.size()); ++j) where[target.bars[j].id] = j;
  BarMatch m;
  m.target.assign(source.bars.size(), -1);
  m.ambiguous.assign(source.bars.size(), 0);
  for (std::size_t i = 0; i < source.bars.size(); ++i) {
    auto it = where.find(source.bars[i].id);
    if (it != where.end()) m.target[i] = it->second;
  }
  return m;
}

}  // namespace mpma
