#pragma once

#include <cstddef>
#include <vector>

#include "qser/series.hpp"

namespace qser {

/// One factor (q^offset; q^modulus)_inf ^ exponent.
struct PochhammerFactor {
  std::size_t offset;
  std::size_t modulus;
  int exponent;
};

/// Finite product of Pochhammer factors. Offsets must be >= 1, which keeps
/// the constant term at 1 for any integer exponents.
class ProductSpec {
 public:
  ProductSpec() = default;
  ProductSpec(std::initializer_list<PochhammerFactor> factors);
  explicit ProductSpec(std::vector<PochhammerFactor> factors);

  const std::vector<PochhammerFactor>& factors() const noexcept {
    return factors_;
  }

 private:
  std::vector<PochhammerFactor> factors_;
};

/// prod_{k>=0} (1 - q^{offset + k modulus}) truncated to prec.
Series pochhammer_inf(std::size_t offset, std::size_t modulus,
                      std::size_t prec);

/// f_k = (q^k; q^k)_inf via the pentagonal number theorem.
Series euler_f(std::size_t k, std::size_t prec);

/// f_k expanded as the direct product; reference for euler_f.
Series euler_f_product(std::size_t k, std::size_t prec);

Series expand_product(const ProductSpec& spec, std::size_t prec);

}  // namespace qser
