#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "schur/error.hpp"

namespace schur {

/// Canonical (mixed-radix) index of a group element.
using Index = std::uint32_t;

/// Residue tuple (a_1, ..., a_k) with 0 <= a_i < m_i.
struct Element {
  std::vector<int> residues;

  friend bool operator==(const Element&, const Element&) = default;
};

class Subgroup;
class GroupMap;

namespace detail {
struct GroupData;
}

/// Z_{m_1} x ... x Z_{m_k}. Elements are addressed by canonical index in
/// lexicographic order of residue tuples (last coordinate fastest). The empty
/// order list is the trivial group.
///
/// Cheap to copy: the multiplication table is shared and immutable.
class AbelianGroup {
 public:
  AbelianGroup();
  explicit AbelianGroup(std::vector<int> orders);

  const std::vector<int>& orders() const;
  std::size_t size() const;
  std::size_t rank() const { return orders().size(); }
  int exponent() const;

  static constexpr Index identity() { return 0; }
  Index mul(Index a, Index b) const;
  Index inv(Index a) const;
  Index pow(Index a, long long m) const;
  int order(Index a) const;
  /// Index of the i-th canonical generator (1 in coordinate i).
  Index generator(std::size_t i) const;

  Element element(Index a) const;
  Index index(const Element& e) const;
  std::vector<Element> elements() const;

  Element mul(const Element& g, const Element& h) const;
  Element inv(const Element& g) const;
  Element pow(const Element& g, long long m) const;
  int order(const Element& g) const;

  /// All subgroups, sorted by (size, members). Cached per group.
  const std::vector<Subgroup>& subgroups() const;
  /// Full automorphism group as image tables. Cached per group.
  const std::vector<GroupMap>& automorphisms() const;

  std::string to_string() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.orders() == b.orders();
  }

 private:
  std::shared_ptr<detail::GroupData> data_;
};

/// A subgroup as its sorted member list plus the generators it came from.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::vector<Index> members, std::vector<Index> generators);

  const std::vector<Index>& members() const { return members_; }
  const std::vector<Index>& generators() const { return generators_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Index g) const;
  bool is_subgroup_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members_ < b.members_;
  }

 private:
  std::vector<Index> members_;
  std::vector<Index> generators_;
};

/// <X>. Throws InvalidArgument on empty X.
Subgroup generated(const AbelianGroup& g, std::span<const Index> set);
/// {g : Xg = X}. Throws InvalidArgument on empty X.
Subgroup radical(const AbelianGroup& g, std::span<const Index> set);
Subgroup trivial_subgroup(const AbelianGroup& g);
Subgroup whole_group(const AbelianGroup& g);
/// Smallest subgroup containing both.
Subgroup join(const AbelianGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// True iff the set contains e and is closed under multiplication.
bool is_subgroup(const AbelianGroup& g, std::span<const Index> set);

/// Subgroup lattice via closure of all <= 2-generator sets and pairwise
/// joins until fixpoint. Throws BudgetExceeded when |G| > max_order.
std::vector<Subgroup> subgroups(const AbelianGroup& g,
                                std::size_t max_order = kDefaultMaxOrder);

/// Homomorphism between two groups, stored as an image table.
class GroupMap {
 public:
  GroupMap(AbelianGroup source, AbelianGroup target, std::vector<Index> images);

  static GroupMap identity(const AbelianGroup& g);

  const AbelianGroup& source() const { return source_; }
  const AbelianGroup& target() const { return target_; }
  const std::vector<Index>& table() const { return images_; }
  Index operator()(Index g) const { return images_[g]; }

  bool injective() const { return injective_; }
  bool surjective() const { return surjective_; }
  bool is_automorphism() const {
    return injective_ && surjective_ && source_ == target_;
  }
  /// Exhaustive check of f(gh) = f(g)f(h).
  bool is_homomorphism() const;

  /// x -> next(this(x)).
  GroupMap then(const GroupMap& next) const;
  GroupMap inverse() const;
  /// Multiplicative order of an automorphism.
  int order() const;

  friend bool operator==(const GroupMap& a, const GroupMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ &&
           a.images_ == b.images_;
  }
  friend bool operator<(const GroupMap& a, const GroupMap& b) {
    return a.images_ < b.images_;
  }

 private:
  AbelianGroup source_;
  AbelianGroup target_;
  std::vector<Index> images_;
  bool injective_ = false;
  bool surjective_ = false;
};

/// Endomorphism determined by the images of the canonical generators.
/// Throws InvalidArgument when an image order does not divide the order of
/// its generator (the map would be ill-defined).
GroupMap map_from_generator_images(const AbelianGroup& g,
                                   std::span<const Index> images);

/// Complete Aut(G) by enumerating generator images. Throws BudgetExceeded
/// when |G| > max_order.
std::vector<GroupMap> automorphisms(const AbelianGroup& g,
                                    std::size_t max_order = kDefaultMaxOrder);

/// All elements of the group generated by a set of automorphisms.
std::vector<GroupMap> generate_automorphism_group(
    const AbelianGroup& g, std::span<const GroupMap> generators);

/// G/L in invariant-factor form (ascending orders, each dividing the next)
/// together with the projection.
struct Quotient {
  AbelianGroup group;
  GroupMap projection;
};
Quotient quotient(const AbelianGroup& g, const Subgroup& l);

/// A subgroup presented as a canonical group together with the embedding
/// from canonical indices of that group into the ambient group.
struct Presentation {
  AbelianGroup group;
  std::vector<Index> embedding;
};
Presentation present(const AbelianGroup& g, const Subgroup& h);

/// Invariant factors of G (ascending).
std::vector<int> invariant_factors(const AbelianGroup& g);

}  // namespace schur
