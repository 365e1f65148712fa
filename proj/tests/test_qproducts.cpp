#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "qser/qproducts.hpp"

using qser::Series;

namespace {

Series from_oracle(const oracle::Poly& p) {
  return Series::from_ints(std::vector<long>(p.begin(), p.end()));
}

}  // namespace

TEST_CASE("pochhammer_inf") {
  // (1-q)(1-q^2)...(1-q^7) multiplied out term by term.
  const auto brute = oracle::product(1, 1, 8);
  CHECK(brute == oracle::Poly{1, -1, -1, 0, 0, 1, 0, 1});
  CHECK(qser::pochhammer_inf(1, 1, 8) == from_oracle(brute));
  CHECK(qser::pochhammer_inf(1, 5, 3) == Series::from_ints({1, -1, 0}));
  CHECK(qser::pochhammer_inf(3, 7, 0).prec() == 0);
  for (std::size_t a = 1; a <= 4; ++a) {
    CHECK(qser::pochhammer_inf(a, 5, 60) == from_oracle(oracle::product(a, 5, 60)));
  }
}

TEST_CASE("euler_f") {
  CHECK(qser::euler_f(1, 8) == qser::pochhammer_inf(1, 1, 8));
  const auto f5 = qser::euler_f(5, 26);
  for (std::size_t n = 0; n < f5.prec(); ++n) {
    if (n % 5 != 0) CHECK(f5[n] == 0);
  }
  CHECK(qser::euler_f(3, 0).prec() == 0);
  CHECK(qser::euler_f(7, 1) == Series::one(1));
}

TEST_CASE("f5^6/f1^6 has q-coefficient 6") {
  const std::size_t n = 4;
  const auto brute = oracle::mul(oracle::pow(oracle::product(5, 5, n), 6),
                                 oracle::inv(oracle::pow(oracle::product(1, 1, n), 6)));
  CHECK(brute[1] == 6);
  const auto ratio =
      qser::expand_product({{5, 5, 6}, {1, 1, -6}}, n);
  CHECK(ratio == from_oracle(brute));
}

TEST_CASE("expand_product") {
  const auto R = qser::expand_product(
      {{1, 5, 1}, {4, 5, 1}, {2, 5, -1}, {3, 5, -1}}, 4);
  CHECK(R == Series::from_ints({1, -1, 1, 0}));
  CHECK(qser::expand_product({}, 5) == Series::one(5));
  CHECK(qser::expand_product({{1, 1, 6}, {5, 5, -6}}, 10)[0] == 1);

  // Against the continued fraction, a construction that never sees a product.
  const auto cf = oracle::rr_continued_fraction(40);
  CHECK(qser::expand_product({{1, 5, 1}, {4, 5, 1}, {2, 5, -1}, {3, 5, -1}},
                             40) == from_oracle(cf));
}

TEST_CASE("invalid factors are rejected") {
  CHECK_THROWS_AS(qser::ProductSpec({{0, 5, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(qser::ProductSpec({{1, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(qser::ProductSpec({{1, 5, 0}}), std::invalid_argument);
}

TEST_CASE("exponents add") {
  for (int e1 : {-3, -1, 2, 4}) {
    for (int e2 : {-2, 1, 3}) {
      const auto split = qser::expand_product({{2, 3, e1}, {2, 3, e2}}, 90);
      if (e1 + e2 == 0) {
        CHECK(split == Series::one(90));
      } else {
        CHECK(split == qser::expand_product({{2, 3, e1 + e2}}, 90));
      }
    }
  }
}

TEST_CASE("pentagonal fast path equals the direct product") {
  for (std::size_t k : {1, 5, 25}) {
    CHECK(qser::euler_f(k, 2000) == qser::euler_f_product(k, 2000));
  }
}

TEST_CASE("positive-exponent products have constant term 1") {
  for (std::size_t a = 1; a <= 6; ++a) {
    for (std::size_t m = 1; m <= 6; ++m) {
      CHECK(qser::expand_product({{a, m, 2}, {m, a, 1}}, 30)[0] == 1);
    }
  }
}
