#include "mpma/approximation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mpma/kernels.hpp"
#include "mpma/vineyard.hpp"

namespace mpma {

double default_tolerance(double delta) { return std::max(1e-9, 1e-6 * delta); }

IntervalModule IntervalModule::from_points(int hom_dim, const std::vector<Point>& births,
                                           const std::vector<Point>& deaths) {
  IntervalModule I;
  I.hom_dim = hom_dim;
  for (const auto& p : births) I.births.push_back({p, true, {}});
  for (const auto& p : deaths) I.deaths.push_back({p, false, {}});
  return I;
}

namespace {

std::vector<int> summand_lines(const Summand& s, const std::vector<int>& lines) {
  std::vector<int> out;
  for (int l : lines)
    if (s.bars.count(l)) out.push_back(l);
  return out;
}

const Point& endpoint(const Bar& b, bool birth) { return birth ? b.birth_point : b.death_point; }

std::string describe(const Point& p) {
  std::ostringstream o;
  o << "(";
  for (std::size_t i = 0; i < p.size(); ++i) o << (i ? ", " : "") << p[i];
  o << ")";
  return o.str();
}

void label_kind(const Summand& s, const std::vector<int>& set, bool birth, double tol,
                std::map<int, std::vector<Label>>& out, int& conflicts) {
  const std::size_t n = s.bars.begin()->second.birth_point.size();
  for (std::size_t i = 0; i < n; ++i) {
    double lo = kInf, hi = -kInf, sum = 0;
    for (int l : set) {
      double v = endpoint(s.bars.at(l), birth)[i];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      sum += v;
    }
    double c;
    if (std::isinf(lo) || std::isinf(hi)) {
      if (lo != hi) continue;
      c = lo;
    } else {
      if (hi - lo > tol) continue;
      c = sum / static_cast<double>(set.size());
    }
    for (int l : set) {
      auto& labs = out[l];
      auto it = std::find_if(labs.begin(), labs.end(), [&](const Label& a) { return a.axis == static_cast<int>(i); });
      if (it == labs.end())
        labs.push_back({static_cast<int>(i), c});
      else if (!same_value(it->value, c, tol))
        ++conflicts;
    }
  }
}

}  // namespace

EndpointLabels label_endpoints(const Summand& s, const LineGrid& g, double tol) {
  EndpointLabels labels;
  for (const auto& [l, bar] : s.bars) {
    auto set = g.surrounding(l);
    // A singleton set carries no evidence of a facet, and a set the summand
    // only partly covers cannot witness one.
    if (set.size() < 2 || summand_lines(s, set).size() != set.size()) continue;
    label_kind(s, set, true, tol, labels.birth, labels.conflicts);
    label_kind(s, set, false, tol, labels.death, labels.conflicts);
  }
  return labels;
}

CornerResult compute_corners(const Summand& s, const EndpointLabels& labels, const LineGrid& g, const Box& K, double tol,
                             bool lenient) {
  CornerResult res;
  const std::size_t n = K.dim();
  for (const auto& [l, bar] : s.bars) {
    const auto set = summand_lines(s, g.surrounding(l));
    for (bool birth : {true, false}) {
      const auto& labs = birth ? labels.birth : labels.death;
      bool in_k = true, labeled = true;
      for (int m : set) {
        in_k = in_k && K.contains(endpoint(s.bars.at(m), birth), tol);
        auto it = labs.find(m);
        labeled = labeled && it != labs.end() && !it->second.empty();
      }
      auto& out = birth ? res.births : res.deaths;
      if (labeled) {
        Corner c{Point(n, 0.0), birth, {}};
        std::vector<char> fixed(n, 0);
        for (int m : set)
          for (const Label& a : labs.at(m)) {
            if (!fixed[a.axis]) {
              c.coords[a.axis] = a.value;
              fixed[a.axis] = 1;
            } else {
              c.coords[a.axis] = birth ? std::min(c.coords[a.axis], a.value) : std::max(c.coords[a.axis], a.value);
            }
          }
        for (std::size_t j = 0; j < n; ++j) {
          if (fixed[j]) {
            c.codirection.push_back(static_cast<int>(j));
            continue;
          }
          // A free coordinate is sent to infinity only along an axis through
          // which the endpoints actually leave K.
          bool exits = false;
          double ext = birth ? kInf : -kInf;
          for (int m : set) {
            double v = endpoint(s.bars.at(m), birth)[j];
            exits = exits || (birth ? v < K.low[j] - tol : v > K.high[j] + tol);
            ext = birth ? std::min(ext, v) : std::max(ext, v);
          }
          c.coords[j] = exits ? (birth ? -kInf : kInf) : ext;
        }
        out.push_back(std::move(c));
        continue;
      }
      if (!in_k) {
        std::string msg = std::string("unlabeled ") + (birth ? "birth" : "death") + "point outside K on line " +
                          std::to_string(l) + " at " + describe(endpoint(bar, birth));
        if (!lenient) throw AlgorithmError(msg + "; delta may be too large for this module");
        res.warnings.push_back(msg);
      }
      for (int m : set) out.push_back({endpoint(s.bars.at(m), birth), birth, {}});
      ++(birth ? res.raw_birth_sets : res.raw_death_sets);
    }
  }
  return res;
}

std::vector<Corner> prune_corners(std::vector<Corner> corners, bool birth, double tol) {
  std::sort(corners.begin(), corners.end(), [](const Corner& a, const Corner& b) { return a.coords < b.coords; });
  auto equal = [&](const Point& a, const Point& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!same_value(a[i], b[i], tol)) return false;
    return true;
  };
  std::vector<Corner> unique;
  for (auto& c : corners) {
    auto it = std::find_if(unique.begin(), unique.end(), [&](const Corner& u) { return equal(u.coords, c.coords); });
    if (it == unique.end()) {
      unique.push_back(std::move(c));
    } else {
      for (int a : c.codirection)
        if (std::find(it->codirection.begin(), it->codirection.end(), a) == it->codirection.end())
          it->codirection.push_back(a);
      std::sort(it->codirection.begin(), it->codirection.end());
    }
  }
  std::vector<Corner> kept;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < unique.size() && !dominated; ++j) {
      if (i == j) continue;
      const Point &a = unique[i].coords, &b = unique[j].coords;
      dominated = birth ? leq(b, a, tol) : leq(a, b, tol);
    }
    if (!dominated) kept.push_back(unique[i]);
  }
  return kept;
}

IntervalModule approximate_interval(const Summand& s, const LineGrid& g, const Box& K, double tol, bool lenient,
                                    std::vector<std::string>* warnings) {
  IntervalModule I;
  I.hom_dim = s.hom_dim;
  I.diag.bar_count = s.bars.size();
  if (s.bars.empty()) return I;
  auto labels = label_endpoints(s, g, tol);
  auto cr = compute_corners(s, labels, g, K, tol, lenient);
  I.births = prune_corners(std::move(cr.births), true, tol);
  I.deaths = prune_corners(std::move(cr.deaths), false, tol);
  I.diag.raw_birth_sets = cr.raw_birth_sets;
  I.diag.raw_death_sets = cr.raw_death_sets;
  I.diag.label_conflicts = static_cast<std::size_t>(labels.conflicts);
  if (warnings) warnings->insert(warnings->end(), cr.warnings.begin(), cr.warnings.end());
  return I;
}

namespace {

SummandSet collect_vineyard(const FilteredComplex& c, const LineGrid& g, const ApproxOptions& opt) {
  SummandSet out;
  const auto path = g.snake_order();
  Vineyard v(c, g.lines[path[0]], path[0]);
  std::map<long, int> owner;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const int line = path[k];
    if (k > 0) {
      long swaps = v.advance(g.lines[line], line);
      out.max_transpositions = std::max(out.max_transpositions, swaps);
      out.total_transpositions += swaps;
    }
    for (auto& bar : v.barcode(opt.dims).bars) {
      auto it = owner.find(bar.id);
      if (it == owner.end() || out.summands[it->second].hom_dim != bar.hom_dim) {
        owner[bar.id] = static_cast<int>(out.summands.size());
        out.summands.push_back({bar.hom_dim, {}});
        it = owner.find(bar.id);
      }
      out.summands[it->second].bars.emplace(line, std::move(bar));
    }
  }
  return out;
}

SummandSet collect_compatibility(const FilteredComplex& c, const LineGrid& g, const ApproxOptions& opt, double tol) {
  SummandSet out;
  const auto path = g.snake_order();
  std::vector<int> rank(g.size());
  for (std::size_t k = 0; k < path.size(); ++k) rank[path[k]] = static_cast<int>(k);

  auto bcs = kernels::line_barcodes(c, g, opt.dims);
  std::vector<kernels::LinePair> pairs;
  std::vector<std::vector<int>> incoming(g.size());  // indices into pairs
  for (int line : path)
    for (int nb : g.neighbours(line))
      if (rank[nb] < rank[line]) {
        incoming[line].push_back(static_cast<int>(pairs.size()));
        pairs.emplace_back(nb, line);
      }
  auto matches = kernels::match_pairs(bcs, pairs, opt.delta, tol);

  int ambiguous_pairs = 0, ill_defined = 0, conflicts = 0;
  for (const auto& m : matches) {
    out.ambiguous_matches += m.ambiguity_count();
    ambiguous_pairs += m.ambiguity_count() > 0;
    ill_defined += m.ill_defined;
  }

  std::vector<std::vector<int>> owner(g.size());
  for (int line : path) {
    const auto& bars = bcs[line].bars;
    owner[line].assign(bars.size(), -1);
    for (std::size_t j = 0; j < bars.size(); ++j) {
      std::set<int> cand;
      for (int p : incoming[line]) {
        const auto& m = matches[p];
        const int src = pairs[p].first;
        for (std::size_t i = 0; i < m.target.size(); ++i)
          if (m.target[i] == static_cast<int>(j)) cand.insert(owner[src][i]);
      }
      if (cand.size() > 1) ++conflicts;
      int chosen = -1;
      for (int s : cand)
        if (!out.summands[s].bars.count(line) && out.summands[s].hom_dim == bars[j].hom_dim) {
          chosen = s;
          break;
        }
      if (chosen < 0) {
        chosen = static_cast<int>(out.summands.size());
        out.summands.push_back({bars[j].hom_dim, {}});
      }
      owner[line][j] = chosen;
      out.summands[chosen].bars.emplace(line, bars[j]);
    }
  }
  if (out.ambiguous_matches > 0)
    out.warnings.push_back("compatibility matching was ambiguous for " + std::to_string(out.ambiguous_matches) +
                           " bars on " + std::to_string(ambiguous_pairs) +
                           " line pairs; consider the vineyard matcher or a smaller delta");
  if (ill_defined > 0)
    out.warnings.push_back("compatibility matching left long bars unmatched on " + std::to_string(ill_defined) +
                           " line pairs");
  if (conflicts > 0)
    out.warnings.push_back(std::to_string(conflicts) + " bars were matched from different summands");
  return out;
}

}  // namespace

SummandSet collect_summands(const FilteredComplex& c, const LineGrid& g, const ApproxOptions& opt) {
  if (opt.matcher == Matcher::vineyard) return collect_vineyard(c, g, opt);
  return collect_compatibility(c, g, opt, opt.tol < 0 ? default_tolerance(opt.delta) : opt.tol);
}

ApproxModule approximate_module(const FilteredComplex& c, const Box& K, const ApproxOptions& opt) {
  const double tol = opt.tol < 0 ? default_tolerance(opt.delta) : opt.tol;
  ApproxModule M;
  M.n_params = c.n_params;
  M.delta = opt.delta;
  M.box = K;
  M.matcher = opt.matcher;
  const LineGrid g = build_grid(K.expanded(2 * opt.delta), opt.delta);
  M.n_lines = g.size();
  if (c.size() == 0) return M;

  SummandSet ss = collect_summands(c, g, opt);
  M.warnings = std::move(ss.warnings);
  M.max_transpositions = ss.max_transpositions;
  M.total_transpositions = ss.total_transpositions;
  M.ambiguous_matches = ss.ambiguous_matches;

  const long ns = static_cast<long>(ss.summands.size());
  M.intervals.resize(ns);
  std::vector<std::vector<std::string>> warn(ns);
  std::vector<std::string> errors(ns);
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < ns; ++k) {
    try {
      M.intervals[k] = approximate_interval(ss.summands[k], g, K, tol, opt.lenient, &warn[k]);
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  }
  for (long k = 0; k < ns; ++k) {
    if (!errors[k].empty()) throw AlgorithmError(errors[k]);
    M.warnings.insert(M.warnings.end(), warn[k].begin(), warn[k].end());
  }
  return M;
}

bool support_contains(const IntervalModule& I, const Point& x) {
  bool above = false, below = false;
  for (const auto& c : I.births)
    if (leq(c.coords, x)) {
      above = true;
      break;
    }
  if (!above) return false;
  for (const auto& c : I.deaths)
    if (leq(x, c.coords)) {
      below = true;
      break;
    }
  return below;
}

}  // namespace mpma
