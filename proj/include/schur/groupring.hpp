#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "schur/group.hpp"

namespace schur {

/// Element of the integer group ring ZG as a dense coefficient vector over
/// canonical indices. Arithmetic is exact; overflow throws.
class GroupRingElement {
 public:
  explicit GroupRingElement(AbelianGroup g);
  GroupRingElement(AbelianGroup g, std::vector<std::int64_t> coefficients);

  /// The simple quantity sum_{x in X} x.
  static GroupRingElement sum_of_set(const AbelianGroup& g, std::span<const Index> set);

  const AbelianGroup& group() const { return group_; }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t coefficient(Index g) const { return coeffs_.at(g); }
  /// Indices with nonzero coefficient, ascending.
  std::vector<Index> support() const;
  bool is_zero() const;

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement scaled(std::int64_t k) const;

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void require_same_group(const GroupRingElement& o) const;

  AbelianGroup group_;
  std::vector<std::int64_t> coeffs_;
};

/// Convolution of two indicator sets: result[g] = #{(x, y) in X x Y : xy = g}.
/// The hot path of validation and enumeration; no overflow is possible.
std::vector<std::int32_t> set_product_counts(const AbelianGroup& g, std::span<const Index> x,
                                             std::span<const Index> y);

}  // namespace schur
