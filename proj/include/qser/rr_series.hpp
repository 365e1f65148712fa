#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string_view>

#include "qser/series.hpp"

namespace qser {

/// Every series the engine knows how to build by name.
///
/// A, B, C, D, c, d are the coefficient families and alias R5inv, R5,
/// Cratio, Dratio, Rinv and R respectively.
enum class NamedSeries {
  G,
  H,
  G_sum,
  H_sum,
  R,
  Rinv,
  R5,
  R5inv,
  Rq5,
  Cratio,
  Dratio,
  Fratio15,
  Fratio51,
  A,
  B,
  C,
  D,
  c,
  d,
};

inline constexpr std::array kAllNamedSeries = {
    NamedSeries::G,        NamedSeries::H,        NamedSeries::G_sum,
    NamedSeries::H_sum,    NamedSeries::R,        NamedSeries::Rinv,
    NamedSeries::R5,       NamedSeries::R5inv,    NamedSeries::Rq5,
    NamedSeries::Cratio,   NamedSeries::Dratio,   NamedSeries::Fratio15,
    NamedSeries::Fratio51, NamedSeries::A,        NamedSeries::B,
    NamedSeries::C,        NamedSeries::D,        NamedSeries::c,
    NamedSeries::d,
};

std::string_view to_string(NamedSeries name);
/// Case-sensitive: "c" and "C" are different series.
std::optional<NamedSeries> parse_named_series(std::string_view text);

/// Builds named series from their product forms and caches the longest
/// expansion seen per series. Shorter requests are served by truncating the
/// cached prefix. Safe for concurrent use; two threads racing on the same
/// series may both compute it, and they compute the same coefficients.
class SeriesRegistry {
 public:
  Series build(NamedSeries name, std::size_t prec);
  Integer coefficient(NamedSeries name, std::size_t n);

  /// Longest cached expansion of name, 0 if none.
  std::size_t cached_prec(NamedSeries name) const;
  void clear();

  static SeriesRegistry& global();

 private:
  Series construct(NamedSeries name, std::size_t prec);

  mutable std::shared_mutex mutex_;
  std::map<NamedSeries, Series> cache_;
};

Series build(NamedSeries name, std::size_t prec);
Integer coefficient(NamedSeries name, std::size_t n);

/// Sum side of the Rogers-Ramanujan identities, sum_n q^{n^2 (+n)} / (q;q)_n.
/// Accepts only G_sum and H_sum.
Series build_sum_form(NamedSeries name, std::size_t prec);

}  // namespace qser
