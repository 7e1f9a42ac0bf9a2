#include "mpma/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mpma::kernels {

namespace {
int default_threads = -1;
}

void set_threads(int n) {
#ifdef _OPENMP
  if (default_threads < 0) default_threads = omp_get_max_threads();
  omp_set_num_threads(n > 0 ? n : default_threads);
#else
  (void)n;
  (void)default_threads;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Barcode> line_barcodes(const FilteredComplex& c, const LineGrid& g, const std::vector<int>& dims) {
  const long n = static_cast<long>(g.size());
  std::vector<Barcode> out(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long l = 0; l < n; ++l) out[l] = line_barcode(c, g.lines[l], static_cast<int>(l), dims);
  return out;
}

std::vector<Barcode> line_barcodes_serial(const FilteredComplex& c, const LineGrid& g, const std::vector<int>& dims) {
  std::vector<Barcode> out;
  out.reserve(g.size());
  for (std::size_t l = 0; l < g.size(); ++l) out.push_back(line_barcode(c, g.lines[l], static_cast<int>(l), dims));
  return out;
}

std::vector<BarMatch> match_pairs(const std::vector<Barcode>& bcs, const std::vector<LinePair>& pairs, double delta,
                                  double tol) {
  const long n = static_cast<long>(pairs.size());
  std::vector<BarMatch> out(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long k = 0; k < n; ++k)
    out[k] = compatibility_match(bcs[pairs[k].first], bcs[pairs[k].second], delta, tol);
  return out;
}

std::vector<BarMatch> match_pairs_serial(const std::vector<Barcode>& bcs, const std::vector<LinePair>& pairs,
                                         double delta, double tol) {
  std::vector<BarMatch> out;
  out.reserve(pairs.size());
  for (auto [a, b] : pairs) out.push_back(compatibility_match(bcs[a], bcs[b], delta, tol));
  return out;
}

}  // namespace mpma::kernels
