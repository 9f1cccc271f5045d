#include "schur/groupring.hpp"

#include <algorithm>

namespace schur {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("group ring coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("group ring coefficient overflow");
  return r;
}

}  // namespace

GroupRingElement::GroupRingElement(AbelianGroup g)
    : group_(std::move(g)), coeffs_(group_.size(), 0) {}

GroupRingElement::GroupRingElement(AbelianGroup g, std::vector<std::int64_t> coefficients)
    : group_(std::move(g)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != group_.size())
    throw InvalidArgument("coefficient vector length must equal |G|");
}

GroupRingElement GroupRingElement::sum_of_set(const AbelianGroup& g, std::span<const Index> set) {
  GroupRingElement u(g);
  for (Index x : set) {
    if (x >= g.size()) throw InvalidArgument("sum_of_set: element out of range");
    u.coeffs_[x] = 1;
  }
  return u;
}

std::vector<Index> GroupRingElement::support() const {
  std::vector<Index> out;
  for (Index i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.push_back(i);
  return out;
}

bool GroupRingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

void GroupRingElement::require_same_group(const GroupRingElement& o) const {
  if (!(group_ == o.group_))
    throw InvalidArgument("group ring operands over different groups " + group_.to_string() +
                          " and " + o.group_.to_string());
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  require_same_group(o);
  GroupRingElement r(group_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  return *this + o.scaled(-1);
}

GroupRingElement GroupRingElement::scaled(std::int64_t k) const {
  GroupRingElement r(group_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = checked_mul(coeffs_[i], k);
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  require_same_group(o);
  GroupRingElement r(group_);
  const Index n = static_cast<Index>(coeffs_.size());
  for (Index a = 0; a < n; ++a) {
    if (coeffs_[a] == 0) continue;
    for (Index b = 0; b < n; ++b) {
      if (o.coeffs_[b] == 0) continue;
      auto& slot = r.coeffs_[group_.mul(a, b)];
      slot = checked_add(slot, checked_mul(coeffs_[a], o.coeffs_[b]));
    }
  }
  return r;
}

std::vector<std::int32_t> set_product_counts(const AbelianGroup& g, std::span<const Index> x,
                                             std::span<const Index> y) {
  std::vector<std::int32_t> out(g.size(), 0);
  for (Index a : x)
    for (Index b : y) ++out[g.mul(a, b)];
  return out;
}

}  // namespace schur
