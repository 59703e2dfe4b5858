#include "mpkit/testkit.hpp"

namespace mpkit::testkit {

std::vector<HilbertRow> hilbert_infnorm_study(index_t n_max, Precision precision) {
  if (n_max < 1) throw std::invalid_argument("hilbert_infnorm_study: n_max must be >= 1");
  std::vector<HilbertRow> rows;
  for (index_t n = 1; n <= n_max; ++n)
    rows.push_back(precision == Precision::binary64 ? hilbert_infnorm<double>(n) : hilbert_infnorm<dd_real>(n));
  return rows;
}

}  // namespace mpkit::testkit
