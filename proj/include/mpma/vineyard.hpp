#pragma once

#include <vector>

#include "mpma/matching.hpp"
#include "mpma/persistence.hpp"

namespace mpma {

enum class Schedule { insertion, bubble };

// Reduced matrix kept in sync with a moving line by adjacent transpositions.
// Every pair (creator, killer-or-∞) carries an id that survives updates, so a
// bar can shrink to zero length and come back under the same id.
class Vineyard {
 public:
  Vineyard(const FilteredComplex& c, const Point& base, int line);

  // Swaps positions i and i+1. Throws AlgorithmError on a face/coface pair.
  void transpose(int i);
  // Re-sorts the filtration for a new line; returns the number of transpositions.
  long advance(const Point& base, int line, Schedule schedule = Schedule::insertion);

  Barcode barcode(const std::vector<int>& dims) const;
  const ReducedMatrix& matrix() const { return m_; }
  const std::vector<double>& values() const { return values_; }
  int line() const { return line_; }
  long id_of(int creator) const { return id_[creator]; }

 private:
  struct Pair {
    int b, d;  // d = -1 for ∞
    bool operator==(const Pair& o) const { return b == o.b && d == o.d; }
  };
  Pair pair_of(int s) const;
  bool before(int a, int b) const;  // filtration key on the current line
  void repair(std::vector<int> cols);

  const FilteredComplex* c_;
  ReducedMatrix m_;
  std::vector<double> values_;
  Point base_;
  int line_;
  std::vector<long> id_;  // per creating simplex
};

struct AdvanceResult {
  long transpositions = 0;
  BarMatch matching;
};

// Moves the vineyard to `base` and reports the matching carried by bar ids.
AdvanceResult advance(Vineyard& v, const Point& base, int line, const std::vector<int>& dims,
                      Schedule schedule = Schedule::insertion);

}  // namespace mpma
