#include "qser/series.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

namespace qser {

const char* to_string(SeriesErrc code) {
  switch (code) {
    case SeriesErrc::NonUnitConstantTerm:
      return "NonUnitConstantTerm";
    case SeriesErrc::NonUnitLeadingCoefficient:
      return "NonUnitLeadingCoefficient";
    case SeriesErrc::ValuationMismatch:
      return "ValuationMismatch";
    case SeriesErrc::ZeroDivisor:
      return "ZeroDivisor";
    case SeriesErrc::NegativeShiftNonzeroLowTerms:
      return "NegativeShiftNonzeroLowTerms";
  }
  return "unknown";
}

Series Series::zero(std::size_t prec) {
  return Series(std::vector<Integer>(prec));
}

Series Series::one(std::size_t prec) {
  std::vector<Integer> c(prec);
  if (prec > 0) c[0] = 1;
  return Series(std::move(c));
}

Series Series::from_ints(std::initializer_list<long> coeffs) {
  return from_ints(std::vector<long>(coeffs));
}

Series Series::from_ints(const std::vector<long>& coeffs) {
  std::vector<Integer> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Series(std::move(c));
}

std::optional<std::size_t> Series::valuation() const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (sgn(coeffs_[n]) != 0) return n;
  }
  return std::nullopt;
}

Series Series::truncate(std::size_t prec) const {
  if (prec >= coeffs_.size()) return *this;
  return Series(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + prec));
}

Series add(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.prec(), b.prec());
  std::vector<Integer> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a[i] + b[i];
  return Series(std::move(c));
}

Series sub(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.prec(), b.prec());
  std::vector<Integer> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a[i] - b[i];
  return Series(std::move(c));
}

Series neg(const Series& a) {
  std::vector<Integer> c(a.prec());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a[i];
  return Series(std::move(c));
}

namespace {

std::vector<std::size_t> support(const Series& a, std::size_t n) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) != 0) idx.push_back(i);
  }
  return idx;
}

bool is_unit(const Integer& x) { return x == 1 || x == -1; }

}  // namespace

Series mul(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.prec(), b.prec());
  auto sa = support(a, n);
  auto sb = support(b, n);
  // Walk the sparser operand's support in the inner loop.
  const bool swap = sb.size() < sa.size();
  const Series& dense = swap ? a : b;
  const std::vector<std::size_t>& idx = swap ? sb : sa;
  const Series& sparse = swap ? b : a;

  std::vector<Integer> c(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel
  {
    mpz_class acc;
#pragma omp for schedule(dynamic, 32)
    for (std::int64_t ii = 0; ii < count; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      acc = 0;
      for (std::size_t j : idx) {
        if (j > i) break;
        mpz_addmul(acc.get_mpz_t(), sparse[j].get_mpz_t(),
                   dense[i - j].get_mpz_t());
      }
      c[i] = acc;
    }
  }
  return Series(std::move(c));
}

Series inverse(const Series& a) {
  const std::size_t n = a.prec();
  if (n == 0) return a;
  if (!is_unit(a[0])) {
    throw SeriesError(SeriesErrc::NonUnitConstantTerm,
                      "inverse: constant term " + a[0].get_str() +
                          " is not +1 or -1");
  }
  // b_{2k} = b_k - b_k (a b_k - 1) mod q^{2k}; the inverse is unique, so the
  // result matches the recursive definition exactly.
  std::vector<Integer> b{a[0]};
  std::size_t len = 1;
  while (len < n) {
    const std::size_t next = std::min(2 * len, n);
    std::vector<Integer> padded(next);
    std::copy(b.begin(), b.end(), padded.begin());
    const Series bk(std::move(padded));
    Series err = mul(a.truncate(next), bk);
    std::vector<Integer> e(err.coeffs());
    e[0] -= 1;
    Series corr = mul(bk, Series(std::move(e)));
    b.resize(next);
    for (std::size_t i = len; i < next; ++i) b[i] = -corr[i];
    len = next;
  }
  return Series(std::move(b));
}

Series div(const Series& a, const Series& b) {
  const auto vb = b.valuation();
  if (!vb) {
    throw SeriesError(SeriesErrc::ZeroDivisor,
                      "div: divisor is zero to its precision");
  }
  const std::size_t v = *vb;
  if (!is_unit(b[v])) {
    throw SeriesError(SeriesErrc::NonUnitLeadingCoefficient,
                      "div: leading coefficient " + b[v].get_str() +
                          " is not +1 or -1");
  }
  const auto va = a.valuation();
  if (va && *va < v) {
    throw SeriesError(SeriesErrc::ValuationMismatch,
                      "div: dividend valuation " + std::to_string(*va) +
                          " is below divisor valuation " + std::to_string(v));
  }
  const std::size_t lo = std::min(a.prec(), b.prec());
  const std::size_t p = lo > v ? lo - v : 0;
  std::vector<Integer> num(a.coeffs().begin() + v, a.coeffs().begin() + v + p);
  std::vector<Integer> den(b.coeffs().begin() + v, b.coeffs().begin() + v + p);
  return mul(Series(std::move(num)), inverse(Series(std::move(den))));
}

Series pow(const Series& a, unsigned k) {
  Series result = Series::one(a.prec());
  Series base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Series substitute_qm(const Series& a, std::size_t m) {
  if (m == 0) throw std::invalid_argument("substitute_qm: m must be >= 1");
  std::vector<Integer> c(a.prec() * m);
  for (std::size_t n = 0; n < a.prec(); ++n) c[n * m] = a[n];
  return Series(std::move(c));
}

Series dissect(const Series& a, std::size_t m, std::size_t j) {
  if (m == 0) throw std::invalid_argument("dissect: m must be >= 1");
  if (j >= m) throw std::invalid_argument("dissect: residue must be < m");
  const std::size_t p = a.prec() > j ? (a.prec() - j + m - 1) / m : 0;
  std::vector<Integer> c(p);
  for (std::size_t n = 0; n < p; ++n) c[n] = a[m * n + j];
  return Series(std::move(c));
}

Series shift(const Series& a, std::int64_t k) {
  if (k >= 0) {
    std::vector<Integer> c(a.prec() + static_cast<std::size_t>(k));
    std::copy(a.coeffs().begin(), a.coeffs().end(),
              c.begin() + static_cast<std::ptrdiff_t>(k));
    return Series(std::move(c));
  }
  const auto drop = static_cast<std::size_t>(-k);
  const std::size_t known = std::min(drop, a.prec());
  for (std::size_t i = 0; i < known; ++i) {
    if (sgn(a[i]) != 0) {
      throw SeriesError(SeriesErrc::NegativeShiftNonzeroLowTerms,
                        "shift: coefficient of q^" + std::to_string(i) +
                            " is nonzero");
    }
  }
  if (drop >= a.prec()) return Series();
  return Series(std::vector<Integer>(a.coeffs().begin() +
                                         static_cast<std::ptrdiff_t>(drop),
                                     a.coeffs().end()));
}

Series scale(const Series& a, const Integer& c) {
  std::vector<Integer> out(a.prec());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * c;
  return Series(std::move(out));
}

Series scale(const Series& a, long c) { return scale(a, Integer(c)); }

std::optional<std::size_t> first_difference(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.prec(), b.prec());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

}  // namespace qser
