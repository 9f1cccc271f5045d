#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "schur/group.hpp"

namespace schur {

using BigInt = boost::multiprecision::cpp_int;

/// Bijection of {0, ..., n-1} as an image array.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Index> images);
  static Permutation identity(std::size_t n);

  std::size_t degree() const { return img_.size(); }
  Index operator()(Index x) const { return img_[x]; }
  const std::vector<Index>& images() const { return img_; }
  bool is_identity() const;

  /// x -> next(this(x)).
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Index> img_;
};

namespace detail {
struct Chain;
}

/// Permutation group given by generators, with a stabilizer chain built on
/// first use (deterministic Schreier-Sims). Symmetric groups on a support
/// are kept symbolic so their chain is never materialized.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Index> base_prefix = {}, std::size_t chain_budget = kDefaultChainBudget);
  /// Sym(support) acting on {0, ..., degree-1}, fixing everything else.
  static PermGroup symmetric(std::size_t degree, std::vector<Index> support);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  bool is_symbolic_symmetric() const { return symmetric_; }

  BigInt order() const;
  bool contains(const Permutation& p) const;
  /// The stabilizer of a point, sliced from a chain whose base starts there.
  PermGroup point_stabilizer(Index point) const;
  /// Base points and basic orbit lengths of the chain.
  std::vector<Index> base() const;
  std::vector<std::size_t> basic_orbit_sizes() const;

  /// Orbit partition on points as canonical labels (numbered by least member).
  std::vector<std::uint32_t> orbit_labels() const;
  std::vector<std::vector<Index>> orbits() const;
  /// Orbit partition of the diagonal action on ordered pairs, as canonical
  /// labels indexed by a * degree + b.
  std::vector<std::uint32_t> orbitals(std::size_t budget = kDefaultChainBudget * 64) const;
  /// Some orbit O with |O| = |P| (regular and faithful).
  bool has_faithful_regular_orbit() const;

 private:
  std::shared_ptr<const detail::Chain> chain() const;

  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::vector<Index> base_prefix_;
  std::size_t chain_budget_;
  bool symmetric_ = false;
  std::vector<Index> support_;
  struct Lazy;
  std::shared_ptr<Lazy> lazy_;
};

/// Translations x -> xg by the canonical generators of G.
PermGroup right_translations(const AbelianGroup& g);
Permutation translation(const AbelianGroup& g, Index by);
Permutation as_permutation(const GroupMap& f);

/// Orbital partitions coincide.
bool two_equivalent(const PermGroup& a, const PermGroup& b);

/// Every element of <gens> by breadth-first closure; throws BudgetExceeded
/// past the limit. Intended for cross-checks on small groups.
std::vector<Permutation> enumerate_elements(std::size_t degree, std::span<const Permutation> gens,
                                            std::size_t limit);

}  // namespace schur
