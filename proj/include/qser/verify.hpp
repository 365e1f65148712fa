#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qser/rr_series.hpp"
#include "qser/series.hpp"

namespace qser {

enum class Sign { Pos, Neg, Zero, Unconstrained };

const char* to_string(Sign s);
Sign sign_of(const Integer& x);
/// Strict: Zero only matches Zero, Unconstrained matches anything.
bool sign_matches(const Integer& x, Sign expected);

/// A coefficient index whose value is pinned exactly instead of by its
/// residue class.
struct SignException {
  std::size_t index;
  Integer value;
};

/// Expected signs per residue class with an explicit exception list.
class SignPattern {
 public:
  enum class Kind { Theorem, Conjecture };

  SignPattern(std::size_t modulus, std::map<std::size_t, Sign> expected,
              std::vector<SignException> exceptions = {},
              Kind kind = Kind::Theorem);

  std::size_t modulus() const noexcept { return modulus_; }
  Kind kind() const noexcept { return kind_; }
  const std::vector<SignException>& exceptions() const noexcept {
    return exceptions_;
  }
  /// Unconstrained for residues absent from the map.
  Sign expected_for_residue(std::size_t residue) const;
  const SignException* exception_at(std::size_t index) const;

 private:
  std::size_t modulus_;
  std::map<std::size_t, Sign> expected_;
  std::vector<SignException> exceptions_;
  Kind kind_;
};

enum class Status { Verified, Violated, Falsified };

const char* to_string(Status s);

struct Divergence {
  std::size_t index;
  Integer lhs;
  Integer rhs;
};

struct Violation {
  std::size_t index;
  Integer value;
  Sign expected;

  friend bool operator==(const Violation&, const Violation&) = default;
};

inline constexpr std::size_t kDefaultViolationCap = 20;

/// Outcome of an identity check or a sign scan.
struct Report {
  std::string subject;
  std::size_t order_checked = 0;
  Status status = Status::Verified;
  std::optional<Divergence> first_divergence;
  /// Sorted by index, capped; violation_count has the uncapped total.
  std::vector<Violation> violations;
  std::size_t violation_count = 0;
  /// For Falsified: the failing progression indices, keyed by part.
  std::vector<std::pair<std::string, std::vector<std::size_t>>> falsified;
};

/// Compares lhs and rhs coefficient-wise on [0, prec).
Report compare_series(std::string subject, const Series& lhs,
                      const Series& rhs, std::size_t prec);

/// 1/R^5(q) - q^2 R^5(q) = 11q + f1^6/f5^6.
Report verify_identity_B20(std::size_t prec);

/// R^5(q) as R(q^5) times a quartic ratio in q R(q^5).
Report verify_identity_R5(std::size_t prec);

enum class GenFun { A_full, B_full, D_full };
Report verify_genfun(GenFun which, std::size_t prec);

enum class Dissection { A0, B0, D1, C0 };
Report verify_dissection(Dissection which, std::size_t prec);

Report scan_signs(NamedSeries name, const SignPattern& pattern,
                  std::size_t n_max, std::size_t cap = kDefaultViolationCap);

/// A(5n) < 0, B(5n) < 0, D(5n+1) > 0 for 0 <= n <= n_max.
Report check_conjecture13(std::size_t n_max);

/// Main term of the asymptotic for c(n), n >= 1.
double asymptotic_c(std::size_t n);
/// cos((2 pi / 5)(n - 2/5)), the oscillating factor of asymptotic_c.
double asymptotic_c_cos_factor(std::size_t n);

struct AsymptoticCheck {
  std::size_t n_lo = 0;
  std::size_t n_hi = 0;
  std::size_t compared = 0;
  std::size_t agreeing = 0;
  std::vector<std::size_t> mismatches;
  /// Mean relative error |asym - c| / |c| per window, in order.
  std::vector<double> window_mean_rel_error;

  double agreement() const {
    return compared == 0 ? 1.0 : static_cast<double>(agreeing) / compared;
  }
};

inline constexpr double kCosCutoff = 0.1;
inline constexpr double kSignAgreementThreshold = 0.99;

/// Sign and relative-error comparison of asymptotic_c against exact c(n)
/// over [n_lo, n_hi], skipping |cos factor| <= kCosCutoff.
AsymptoticCheck compare_asymptotic_c(std::size_t n_lo, std::size_t n_hi,
                                     std::size_t window = 100);

/// Scan wrapper: Verified iff the sign agreement is >= 99%; mismatches are
/// listed as violations either way.
Report scan_asymptotic_c(std::size_t n_max,
                         std::size_t cap = kDefaultViolationCap);

/// The named scans driven by the CLI.
SignPattern richmond_c_pattern();
SignPattern richmond_d_pattern();
SignPattern theorem2_pattern();  // A
SignPattern theorem3_pattern();  // B
SignPattern theorem4_pattern();  // C
SignPattern theorem5_pattern();  // D

}  // namespace qser
