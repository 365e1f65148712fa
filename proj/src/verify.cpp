#include "qser/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qser/qproducts.hpp"

namespace qser {

const char* to_string(Sign s) {
  switch (s) {
    case Sign::Pos:
      return "pos";
    case Sign::Neg:
      return "neg";
    case Sign::Zero:
      return "zero";
    case Sign::Unconstrained:
      return "any";
  }
  return "?";
}

Sign sign_of(const Integer& x) {
  const int s = sgn(x);
  return s > 0 ? Sign::Pos : (s < 0 ? Sign::Neg : Sign::Zero);
}

bool sign_matches(const Integer& x, Sign expected) {
  return expected == Sign::Unconstrained || sign_of(x) == expected;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Verified:
      return "verified";
    case Status::Violated:
      return "violated";
    case Status::Falsified:
      return "falsified";
  }
  return "?";
}

SignPattern::SignPattern(std::size_t modulus,
                         std::map<std::size_t, Sign> expected,
                         std::vector<SignException> exceptions, Kind kind)
    : modulus_(modulus),
      expected_(std::move(expected)),
      exceptions_(std::move(exceptions)),
      kind_(kind) {
  if (modulus_ == 0) throw std::invalid_argument("SignPattern: modulus 0");
  for (const auto& [residue, sign] : expected_) {
    if (residue >= modulus_) {
      throw std::invalid_argument("SignPattern: residue " +
                                  std::to_string(residue) + " >= modulus");
    }
  }
  std::sort(exceptions_.begin(), exceptions_.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  for (std::size_t i = 1; i < exceptions_.size(); ++i) {
    if (exceptions_[i].index == exceptions_[i - 1].index) {
      throw std::invalid_argument("SignPattern: duplicate exception index " +
                                  std::to_string(exceptions_[i].index));
    }
  }
}

Sign SignPattern::expected_for_residue(std::size_t residue) const {
  auto it = expected_.find(residue);
  return it == expected_.end() ? Sign::Unconstrained : it->second;
}

const SignException* SignPattern::exception_at(std::size_t index) const {
  auto it = std::lower_bound(
      exceptions_.begin(), exceptions_.end(), index,
      [](const SignException& e, std::size_t i) { return e.index < i; });
  return (it != exceptions_.end() && it->index == index) ? &*it : nullptr;
}

Report compare_series(std::string subject, const Series& lhs,
                      const Series& rhs, std::size_t prec) {
  if (lhs.prec() < prec || rhs.prec() < prec) {
    throw std::logic_error(subject + ": sides built below the checked order");
  }
  Report r;
  r.subject = std::move(subject);
  r.order_checked = prec;
  if (auto at = first_difference(lhs.truncate(prec), rhs.truncate(prec))) {
    r.status = Status::Violated;
    r.first_divergence = Divergence{*at, lhs[*at], rhs[*at]};
  }
  return r;
}

namespace {

Series monomial(std::size_t k, long c, std::size_t prec) {
  std::vector<Integer> v(prec);
  if (k < prec) v[k] = c;
  return Series(std::move(v));
}

Series times_q(const Series& a, std::size_t k, std::size_t prec) {
  return shift(a, static_cast<std::int64_t>(k)).truncate(prec);
}

// Powers x^0..x^4 of x = q R(q^5).
std::vector<Series> qr5_powers(std::size_t prec) {
  const Series x = times_q(build(NamedSeries::Rq5, prec), 1, prec);
  std::vector<Series> p{Series::one(prec), x};
  for (int k = 2; k <= 4; ++k) p.push_back(mul(p.back(), x));
  return p;
}

Series quartic(const std::vector<Series>& x, const std::array<long, 5>& c) {
  Series s = scale(x[0], c[0]);
  for (std::size_t k = 1; k < 5; ++k) s = add(s, scale(x[k], c[k]));
  return s;
}

// 1 - 2x + 4x^2 - 3x^3 + x^4 and 1 + 3x + 4x^2 + 2x^3 + x^4.
constexpr std::array<long, 5> kMinusQuartic{1, -2, 4, -3, 1};
constexpr std::array<long, 5> kPlusQuartic{1, 3, 4, 2, 1};

// 1 - 25 q f5^6/f1^6.
Series c_progression_factor(std::size_t prec) {
  return sub(Series::one(prec),
             times_q(scale(build(NamedSeries::Fratio51, prec), 25), 1, prec));
}

std::size_t conjecture_part(const char* label, NamedSeries name,
                            std::size_t residue, Sign sign, std::size_t n_max,
                            Report& out) {
  const SignPattern pattern(5, {{residue, sign}}, {},
                            SignPattern::Kind::Conjecture);
  Report part =
      scan_signs(name, pattern, 5 * n_max + residue, static_cast<std::size_t>(-1));
  std::vector<std::size_t> at;
  for (const auto& v : part.violations) at.push_back((v.index - residue) / 5);
  out.violations.insert(out.violations.end(), part.violations.begin(),
                        part.violations.end());
  out.violation_count += part.violation_count;
  out.falsified.emplace_back(label, std::move(at));
  return part.violation_count;
}

}  // namespace

Report verify_identity_B20(std::size_t prec) {
  const Series lhs = sub(build(NamedSeries::R5inv, prec),
                         times_q(build(NamedSeries::R5, prec), 2, prec));
  const Series rhs =
      add(monomial(1, 11, prec), build(NamedSeries::Fratio15, prec));
  return compare_series("B20", lhs, rhs, prec);
}

Report verify_identity_R5(std::size_t prec) {
  const auto x = qr5_powers(prec);
  const Series rhs = mul(build(NamedSeries::Rq5, prec),
                         div(quartic(x, kMinusQuartic), quartic(x, kPlusQuartic)));
  return compare_series("R5", build(NamedSeries::R5, prec), rhs, prec);
}

Report verify_genfun(GenFun which, std::size_t prec) {
  const Series rq5 = build(NamedSeries::Rq5, prec);
  const auto x = qr5_powers(prec);
  const Series prefactor =
      div(pow(euler_f(25, prec), 6), pow(euler_f(5, prec), 6));
  // 1/R(q^5) - q - q^2 R(q^5)
  const Series tail = sub(sub(inverse(rq5), monomial(1, 1, prec)),
                          times_q(rq5, 2, prec));

  unsigned r_power = 0;
  const std::array<long, 5>* quart = nullptr;
  NamedSeries direct{};
  const char* subject = "";
  switch (which) {
    case GenFun::A_full:
      r_power = 5;
      quart = &kPlusQuartic;
      direct = NamedSeries::A;
      subject = "A_full";
      break;
    case GenFun::B_full:
      r_power = 3;
      quart = &kMinusQuartic;
      direct = NamedSeries::B;
      subject = "B_full";
      break;
    case GenFun::D_full:
      r_power = 4;
      quart = &kPlusQuartic;
      direct = NamedSeries::D;
      subject = "D_full";
      break;
  }
  const Series q = quartic(x, *quart);
  const Series rhs =
      mul(mul(div(prefactor, pow(rq5, r_power)), mul(q, q)), tail);
  return compare_series(subject, build(direct, prec), rhs, prec);
}

Report verify_dissection(Dissection which, std::size_t prec) {
  using N = NamedSeries;
  const std::size_t full = 5 * prec + 4;
  N name{};
  std::size_t residue = 0;
  Series rhs;
  const char* subject = "";
  switch (which) {
    case Dissection::A0:
      name = N::A;
      subject = "dissect-A0";
      rhs = mul(build(N::Rinv, prec), c_progression_factor(prec));
      break;
    case Dissection::B0:
      name = N::B;
      subject = "dissect-B0";
      rhs = mul(build(N::R, prec), c_progression_factor(prec));
      break;
    case Dissection::C0:
      name = N::C;
      subject = "dissect-C0";
      rhs = c_progression_factor(prec);
      break;
    case Dissection::D1: {
      name = N::D;
      residue = 1;
      subject = "dissect-D1";
      // (f5^6/f1^6) R(q) (5/R^5(q) - 40q)
      const Series bracket =
          sub(scale(build(N::R5inv, prec), 5), monomial(1, 40, prec));
      rhs = mul(mul(build(N::Fratio51, prec), build(N::R, prec)), bracket);
      break;
    }
  }
  const Series lhs = dissect(build(name, full), 5, residue);
  return compare_series(subject, lhs, rhs, prec);
}

Report scan_signs(NamedSeries name, const SignPattern& pattern,
                  std::size_t n_max, std::size_t cap) {
  const Series s = build(name, n_max + 1);
  const auto count = static_cast<std::int64_t>(n_max + 1);
  std::vector<Violation> found;
#pragma omp parallel
  {
    std::vector<Violation> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t ii = 0; ii < count; ++ii) {
      const auto n = static_cast<std::size_t>(ii);
      if (const auto* ex = pattern.exception_at(n)) {
        if (s[n] != ex->value) local.push_back({n, s[n], sign_of(ex->value)});
        continue;
      }
      const Sign want = pattern.expected_for_residue(n % pattern.modulus());
      if (!sign_matches(s[n], want)) local.push_back({n, s[n], want});
    }
#pragma omp critical
    found.insert(found.end(), local.begin(), local.end());
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });

  Report r;
  r.subject = std::string(to_string(name));
  r.order_checked = n_max;
  r.violation_count = found.size();
  if (!found.empty()) {
    if (pattern.kind() == SignPattern::Kind::Conjecture) {
      r.status = Status::Falsified;
      std::vector<std::size_t> at;
      for (const auto& v : found) at.push_back(v.index);
      r.falsified.emplace_back(r.subject, std::move(at));
    } else {
      r.status = Status::Violated;
    }
  }
  if (found.size() > cap) found.resize(cap);
  r.violations = std::move(found);
  return r;
}

Report check_conjecture13(std::size_t n_max) {
  Report r;
  r.subject = "conjecture13";
  r.order_checked = n_max;
  std::size_t total = 0;
  total += conjecture_part("A", NamedSeries::A, 0, Sign::Neg, n_max, r);
  total += conjecture_part("B", NamedSeries::B, 0, Sign::Neg, n_max, r);
  total += conjecture_part("D", NamedSeries::D, 1, Sign::Pos, n_max, r);
  r.status = total > 0 ? Status::Falsified : Status::Verified;
  std::stable_sort(r.violations.begin(), r.violations.end(),
                   [](const auto& a, const auto& b) { return a.index < b.index; });
  if (r.violations.size() > kDefaultViolationCap) {
    r.violations.resize(kDefaultViolationCap);
  }
  return r;
}

double asymptotic_c_cos_factor(std::size_t n) {
  const double x = static_cast<double>(n);
  return std::cos(2.0 * std::numbers::pi / 5.0 * (x - 2.0 / 5.0));
}

double asymptotic_c(std::size_t n) {
  if (n == 0) throw std::invalid_argument("asymptotic_c: n must be >= 1");
  const double five_n = 5.0 * static_cast<double>(n);
  return std::numbers::sqrt2 * std::pow(five_n, -0.75) *
         std::exp(4.0 * std::numbers::pi / 25.0 * std::sqrt(five_n)) *
         asymptotic_c_cos_factor(n);
}

AsymptoticCheck compare_asymptotic_c(std::size_t n_lo, std::size_t n_hi,
                                     std::size_t window) {
  AsymptoticCheck out;
  out.n_lo = std::max<std::size_t>(n_lo, 1);
  out.n_hi = n_hi;
  if (n_hi < out.n_lo) return out;
  if (window == 0) window = 1;
  const Series c = build(NamedSeries::c, n_hi + 1);
  double window_sum = 0.0;
  std::size_t window_count = 0;
  std::size_t window_end = out.n_lo + window;
  auto flush = [&] {
    if (window_count > 0) {
      out.window_mean_rel_error.push_back(window_sum / window_count);
    }
    window_sum = 0.0;
    window_count = 0;
  };
  for (std::size_t n = out.n_lo; n <= n_hi; ++n) {
    if (n >= window_end) {
      flush();
      window_end += window;
    }
    if (std::abs(asymptotic_c_cos_factor(n)) <= kCosCutoff) continue;
    const double approx = asymptotic_c(n);
    ++out.compared;
    if (sgn(c[n]) != 0 && (approx > 0) == (sgn(c[n]) > 0)) {
      ++out.agreeing;
    } else {
      out.mismatches.push_back(n);
    }
    const double exact = c[n].get_d();
    if (exact != 0.0) {
      window_sum += std::abs(approx - exact) / std::abs(exact);
      ++window_count;
    }
  }
  flush();
  return out;
}

Report scan_asymptotic_c(std::size_t n_max, std::size_t cap) {
  const AsymptoticCheck check = compare_asymptotic_c(100, n_max);
  Report r;
  r.subject = "asymptotic-c";
  r.order_checked = n_max;
  r.status = check.agreement() >= kSignAgreementThreshold ? Status::Verified
                                                          : Status::Violated;
  r.violation_count = check.mismatches.size();
  if (!check.mismatches.empty()) {
    const Series c = build(NamedSeries::c, n_max + 1);
    for (std::size_t n : check.mismatches) {
      if (r.violations.size() >= cap) break;
      r.violations.push_back(
          {n, c[n], asymptotic_c(n) > 0 ? Sign::Pos : Sign::Neg});
    }
  }
  return r;
}

SignPattern richmond_c_pattern() {
  return SignPattern(
      5,
      {{0, Sign::Pos}, {1, Sign::Pos}, {2, Sign::Neg}, {3, Sign::Neg},
       {4, Sign::Neg}},
      {{2, 0}, {4, 0}, {9, 0}});
}

SignPattern richmond_d_pattern() {
  return SignPattern(
      5,
      {{0, Sign::Pos}, {1, Sign::Neg}, {2, Sign::Pos}, {3, Sign::Neg},
       {4, Sign::Neg}},
      {{3, 0}, {8, 0}, {13, 0}, {23, 0}});
}

SignPattern theorem2_pattern() {
  return SignPattern(
      5, {{1, Sign::Pos}, {2, Sign::Pos}, {3, Sign::Pos}, {4, Sign::Neg}});
}

SignPattern theorem3_pattern() {
  return SignPattern(
      5, {{1, Sign::Neg}, {2, Sign::Pos}, {3, Sign::Neg}, {4, Sign::Pos}});
}

SignPattern theorem4_pattern() {
  return SignPattern(
      5,
      {{0, Sign::Neg}, {1, Sign::Neg}, {2, Sign::Pos}, {3, Sign::Neg},
       {4, Sign::Pos}},
      {{0, 1}});
}

SignPattern theorem5_pattern() {
  return SignPattern(
      5, {{0, Sign::Neg}, {2, Sign::Pos}, {3, Sign::Pos}, {4, Sign::Neg}},
      {{0, 1}});
}

}  // namespace qser
