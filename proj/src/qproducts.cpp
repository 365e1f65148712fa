#include "qser/qproducts.hpp"

#include <stdexcept>
#include <string>

namespace qser {

namespace {

void validate(const PochhammerFactor& f) {
  if (f.offset < 1 || f.modulus < 1 || f.exponent == 0) {
    throw std::invalid_argument(
        "ProductSpec: factor (q^" + std::to_string(f.offset) + ";q^" +
        std::to_string(f.modulus) + ")^" + std::to_string(f.exponent) +
        " needs offset >= 1, modulus >= 1, exponent != 0");
  }
}

// c *= (1 - q^t) in place, truncated.
void times_binomial(std::vector<Integer>& c, std::size_t t) {
  for (std::size_t i = c.size(); i-- > t;) c[i] -= c[i - t];
}

// c /= (1 - q^t) in place, truncated.
void over_binomial(std::vector<Integer>& c, std::size_t t) {
  for (std::size_t i = t; i < c.size(); ++i) c[i] += c[i - t];
}

}  // namespace

ProductSpec::ProductSpec(std::initializer_list<PochhammerFactor> factors)
    : ProductSpec(std::vector<PochhammerFactor>(factors)) {}

ProductSpec::ProductSpec(std::vector<PochhammerFactor> factors)
    : factors_(std::move(factors)) {
  for (const auto& f : factors_) validate(f);
}

Series pochhammer_inf(std::size_t offset, std::size_t modulus,
                      std::size_t prec) {
  return expand_product(ProductSpec{{offset, modulus, 1}}, prec);
}

Series euler_f(std::size_t k, std::size_t prec) {
  if (k == 0) throw std::invalid_argument("euler_f: k must be >= 1");
  std::vector<Integer> c(prec);
  if (prec == 0) return Series(std::move(c));
  c[0] = 1;
  // sum_j (-1)^j q^{k j(3j-1)/2} over j = 1, -1, 2, -2, ...
  for (std::size_t j = 1;; ++j) {
    const std::size_t lo = k * (j * (3 * j - 1) / 2);
    const std::size_t hi = k * (j * (3 * j + 1) / 2);
    if (lo >= prec) break;
    const long sign = (j % 2 == 0) ? 1 : -1;
    c[lo] += sign;
    if (hi < prec) c[hi] += sign;
  }
  return Series(std::move(c));
}

Series euler_f_product(std::size_t k, std::size_t prec) {
  return pochhammer_inf(k, k, prec);
}

Series expand_product(const ProductSpec& spec, std::size_t prec) {
  std::vector<Integer> c(prec);
  if (prec == 0) return Series(std::move(c));
  c[0] = 1;
  for (const auto& f : spec.factors()) {
    const int reps = f.exponent > 0 ? f.exponent : -f.exponent;
    for (std::size_t t = f.offset; t < prec; t += f.modulus) {
      for (int r = 0; r < reps; ++r) {
        if (f.exponent > 0) {
          times_binomial(c, t);
        } else {
          over_binomial(c, t);
        }
      }
    }
  }
  return Series(std::move(c));
}

}  // namespace qser
