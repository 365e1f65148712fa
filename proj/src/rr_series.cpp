#include "qser/rr_series.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

#include "qser/qproducts.hpp"

namespace qser {

namespace {

struct NameEntry {
  NamedSeries name;
  std::string_view text;
};

constexpr std::array<NameEntry, 19> kNames{{
    {NamedSeries::G, "G"},
    {NamedSeries::H, "H"},
    {NamedSeries::G_sum, "G_sum"},
    {NamedSeries::H_sum, "H_sum"},
    {NamedSeries::R, "R"},
    {NamedSeries::Rinv, "Rinv"},
    {NamedSeries::R5, "R5"},
    {NamedSeries::R5inv, "R5inv"},
    {NamedSeries::Rq5, "Rq5"},
    {NamedSeries::Cratio, "Cratio"},
    {NamedSeries::Dratio, "Dratio"},
    {NamedSeries::Fratio15, "Fratio15"},
    {NamedSeries::Fratio51, "Fratio51"},
    {NamedSeries::A, "A"},
    {NamedSeries::B, "B"},
    {NamedSeries::C, "C"},
    {NamedSeries::D, "D"},
    {NamedSeries::c, "c"},
    {NamedSeries::d, "d"},
}};

// (q;q)_n as a polynomial, truncated to prec.
Series finite_pochhammer(std::size_t n, std::size_t prec) {
  std::vector<Integer> c(prec);
  if (prec == 0) return Series(std::move(c));
  c[0] = 1;
  for (std::size_t k = 1; k <= n && k < prec; ++k) {
    for (std::size_t i = prec; i-- > k;) c[i] -= c[i - k];
  }
  return Series(std::move(c));
}

NamedSeries canonical(NamedSeries name) {
  switch (name) {
    case NamedSeries::A:
      return NamedSeries::R5inv;
    case NamedSeries::B:
      return NamedSeries::R5;
    case NamedSeries::C:
      return NamedSeries::Cratio;
    case NamedSeries::D:
      return NamedSeries::Dratio;
    case NamedSeries::c:
      return NamedSeries::Rinv;
    case NamedSeries::d:
      return NamedSeries::R;
    default:
      return name;
  }
}

}  // namespace

std::string_view to_string(NamedSeries name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.text;
  }
  return "?";
}

std::optional<NamedSeries> parse_named_series(std::string_view text) {
  for (const auto& e : kNames) {
    if (e.text == text) return e.name;
  }
  return std::nullopt;
}

SeriesRegistry& SeriesRegistry::global() {
  static SeriesRegistry registry;
  return registry;
}

Series SeriesRegistry::build(NamedSeries name, std::size_t prec) {
  name = canonical(name);
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(name);
    if (it != cache_.end() && it->second.prec() >= prec) {
      return it->second.truncate(prec);
    }
  }
  Series built = construct(name, prec);
  std::unique_lock lock(mutex_);
  auto& slot = cache_[name];
  if (slot.prec() < built.prec()) slot = built;
  return built;
}

Integer SeriesRegistry::coefficient(NamedSeries name, std::size_t n) {
  return build(name, n + 1)[n];
}

std::size_t SeriesRegistry::cached_prec(NamedSeries name) const {
  std::shared_lock lock(mutex_);
  auto it = cache_.find(canonical(name));
  return it == cache_.end() ? 0 : it->second.prec();
}

void SeriesRegistry::clear() {
  std::unique_lock lock(mutex_);
  cache_.clear();
}

Series SeriesRegistry::construct(NamedSeries name, std::size_t prec) {
  using N = NamedSeries;
  switch (name) {
    case N::G:
      return expand_product({{1, 5, -1}, {4, 5, -1}}, prec);
    case N::H:
      return expand_product({{2, 5, -1}, {3, 5, -1}}, prec);
    case N::G_sum:
    case N::H_sum:
      return build_sum_form(name, prec);
    case N::R:
      return div(build(N::H, prec), build(N::G, prec));
    case N::Rinv:
      return div(build(N::G, prec), build(N::H, prec));
    case N::R5:
      return pow(build(N::R, prec), 5);
    case N::R5inv:
      return inverse(build(N::R5, prec));
    case N::Rq5:
      return substitute_qm(build(N::R, (prec + 4) / 5), 5).truncate(prec);
    case N::Cratio:
      return div(build(N::R5, prec), build(N::Rq5, prec));
    case N::Dratio:
      return div(build(N::Rq5, prec), build(N::R5, prec));
    case N::Fratio15:
      return div(pow(euler_f(1, prec), 6), pow(euler_f(5, prec), 6));
    case N::Fratio51:
      return div(pow(euler_f(5, prec), 6), pow(euler_f(1, prec), 6));
    default:
      break;
  }
  throw std::logic_error("unhandled series name");
}

Series build(NamedSeries name, std::size_t prec) {
  return SeriesRegistry::global().build(name, prec);
}

Integer coefficient(NamedSeries name, std::size_t n) {
  return SeriesRegistry::global().coefficient(name, n);
}

Series build_sum_form(NamedSeries name, std::size_t prec) {
  if (name != NamedSeries::G_sum && name != NamedSeries::H_sum) {
    throw std::invalid_argument("build_sum_form: expected G_sum or H_sum, got " +
                                std::string(to_string(name)));
  }
  const std::size_t extra = name == NamedSeries::H_sum ? 1 : 0;
  Series total = Series::zero(prec);
  for (std::size_t n = 0; n * n < prec; ++n) {
    const std::size_t exponent = n * n + extra * n;
    if (exponent >= prec) break;
    Series term = shift(inverse(finite_pochhammer(n, prec - exponent)),
                        static_cast<std::int64_t>(exponent));
    total = add(total, term);
  }
  return total;
}

}  // namespace qser
