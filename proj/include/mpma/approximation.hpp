#pragma once

#include <map>
#include <string>
#include <vector>

#include "mpma/complex.hpp"
#include "mpma/grid.hpp"
#include "mpma/persistence.hpp"

namespace mpma {

struct Summand {
  int hom_dim = 0;
  std::map<int, Bar> bars;  // line -> bar
};

struct Label {
  int axis;
  double value;
};

// Facet labels per line of a summand, for its birthpoint and its deathpoint.
struct EndpointLabels {
  std::map<int, std::vector<Label>> birth, death;
  int conflicts = 0;  // detections rejected because the axis already carried another value
};

struct Corner {
  Point coords;
  bool birth = true;
  std::vector<int> codirection;  // labeled axes; empty for raw endpoints
};

struct IntervalDiagnostics {
  std::size_t bar_count = 0;
  std::size_t raw_birth_sets = 0, raw_death_sets = 0;  // surrounding sets that fell back to raw endpoints
  std::size_t label_conflicts = 0;
};

struct IntervalModule {
  int hom_dim = 0;
  std::vector<Corner> births, deaths;
  IntervalDiagnostics diag;

  static IntervalModule from_points(int hom_dim, const std::vector<Point>& births, const std::vector<Point>& deaths);
};

enum class Matcher { vineyard, compatibility };

struct ApproxOptions {
  double delta = 0.1;
  Matcher matcher = Matcher::vineyard;
  std::vector<int> dims{0, 1};
  double tol = -1;  // negative: max(1e-9, 1e-6·delta)
  bool lenient = false;
};

struct ApproxModule {
  int n_params = 0;
  double delta = 0;
  Box box;
  std::size_t n_lines = 0;
  Matcher matcher = Matcher::vineyard;
  std::vector<IntervalModule> intervals;
  std::vector<std::string> warnings;
  long max_transpositions = 0, total_transpositions = 0;
  int ambiguous_matches = 0;
};

double default_tolerance(double delta);

EndpointLabels label_endpoints(const Summand& s, const LineGrid& g, double tol);

struct CornerResult {
  std::vector<Corner> births, deaths;
  std::size_t raw_birth_sets = 0, raw_death_sets = 0;
  std::vector<std::string> warnings;
};

// Throws AlgorithmError for an unlabeled endpoint outside K unless lenient.
CornerResult compute_corners(const Summand& s, const EndpointLabels& labels, const LineGrid& g, const Box& K, double tol,
                             bool lenient);

// Drops duplicate and dominated corners of one kind.
std::vector<Corner> prune_corners(std::vector<Corner> corners, bool birth, double tol);

IntervalModule approximate_interval(const Summand& s, const LineGrid& g, const Box& K, double tol, bool lenient,
                                    std::vector<std::string>* warnings = nullptr);

// Groups the bars of every grid line into summands.
struct SummandSet {
  std::vector<Summand> summands;
  std::vector<std::string> warnings;
  long max_transpositions = 0, total_transpositions = 0;
  int ambiguous_matches = 0;
};
SummandSet collect_summands(const FilteredComplex& c, const LineGrid& g, const ApproxOptions& opt);

ApproxModule approximate_module(const FilteredComplex& c, const Box& K, const ApproxOptions& opt);

bool support_contains(const IntervalModule& I, const Point& x);

}  // namespace mpma
