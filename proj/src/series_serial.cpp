#include "qser/series.hpp"

#include <algorithm>

namespace qser::serial {

Series mul(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.prec(), b.prec());
  std::vector<Integer> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return Series(std::move(c));
}

// b[0] = 1/a[0], b[k] = -a[0] * sum_{i=1..k} a[i] b[k-i].
Series inverse(const Series& a) {
  const std::size_t n = a.prec();
  if (n == 0) return a;
  if (a[0] != 1 && a[0] != -1) {
    throw SeriesError(SeriesErrc::NonUnitConstantTerm,
                      "inverse: constant term " + a[0].get_str() +
                          " is not +1 or -1");
  }
  std::vector<Integer> b(n);
  b[0] = a[0];
  Integer acc;
  for (std::size_t k = 1; k < n; ++k) {
    acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += a[i] * b[k - i];
    b[k] = -a[0] * acc;
  }
  return Series(std::move(b));
}

}  // namespace qser::serial
