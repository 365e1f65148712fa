#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qser {

using Integer = mpz_class;

enum class SeriesErrc {
  NonUnitConstantTerm,
  NonUnitLeadingCoefficient,
  ValuationMismatch,
  ZeroDivisor,
  NegativeShiftNonzeroLowTerms,
};

const char* to_string(SeriesErrc code);

class SeriesError : public std::domain_error {
 public:
  SeriesError(SeriesErrc code, const std::string& what)
      : std::domain_error(what), code_(code) {}

  SeriesErrc code() const noexcept { return code_; }

 private:
  SeriesErrc code_;
};

/// Truncated power series in q with exact integer coefficients.
///
/// coeffs()[n] is the coefficient of q^n for 0 <= n < prec(); everything from
/// q^prec() on is unknown. A Series is never mutated after construction, so
/// values can be shared freely across threads.
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}

  static Series zero(std::size_t prec);
  static Series one(std::size_t prec);
  /// Coefficients given as small integers, prec = list length.
  static Series from_ints(std::initializer_list<long> coeffs);
  static Series from_ints(const std::vector<long>& coeffs);

  std::size_t prec() const noexcept { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  const Integer& operator[](std::size_t n) const { return coeffs_[n]; }

  /// Index of the lowest nonzero coefficient; nullopt for the zero series.
  std::optional<std::size_t> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  /// Prefix of length min(prec, this->prec()).
  Series truncate(std::size_t prec) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Integer> coeffs_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);

/// Truncated Cauchy product, prec = min(a.prec, b.prec). Parallel over
/// output coefficients.
Series mul(const Series& a, const Series& b);

/// Multiplicative inverse of a series with constant term +1 or -1.
/// Newton doubling on top of mul(); bit-identical to serial::inverse.
Series inverse(const Series& a);

/// a / b where b has a unit leading coefficient at valuation v <= val(a).
/// The q^v factor cancels, prec = min(a.prec, b.prec) - v.
Series div(const Series& a, const Series& b);

Series pow(const Series& a, unsigned k);

/// a(q^m), prec = a.prec * m.
Series substitute_qm(const Series& a, std::size_t m);

/// sum_n a[m n + j] q^n, keeping only fully-known coefficients.
Series dissect(const Series& a, std::size_t m, std::size_t j);

/// q^k * a. For k < 0 the low |k| coefficients must be zero.
Series shift(const Series& a, std::int64_t k);
Series scale(const Series& a, const Integer& c);
Series scale(const Series& a, long c);

/// Index of the first coefficient where a and b differ, compared over
/// min(a.prec, b.prec).
std::optional<std::size_t> first_difference(const Series& a, const Series& b);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return neg(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

namespace serial {

// Reference kernels. Single-threaded and written for clarity; the parallel
// versions above must agree with these exactly.
Series mul(const Series& a, const Series& b);
Series inverse(const Series& a);

}  // namespace serial

}  // namespace qser
