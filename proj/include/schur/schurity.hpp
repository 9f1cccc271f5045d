#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <string>
#include <vector>

#include "schur/permaction.hpp"
#include "schur/sring.hpp"

namespace schur {

/// Edge-coloured complete digraph on G: colour(a, b) = class of b a^-1.
class CayleyScheme {
 public:
  std::size_t degree() const { return n_; }
  std::size_t rank() const { return rank_; }
  std::uint32_t color(Index a, Index b) const { return colors_[a * n_ + b]; }
  const std::vector<std::uint32_t>& colors() const { return colors_; }
  /// Colour of the transposed relation.
  std::uint32_t transpose(std::uint32_t c) const { return transpose_[c]; }
  /// #{c : colour(a, c) = r, colour(c, b) = s} for any (a, b) of colour t.
  std::int64_t intersection_number(std::uint32_t r, std::uint32_t s, std::uint32_t t) const;

 private:
  friend CayleyScheme cayley_scheme(const SRing& a);
  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  std::vector<std::uint32_t> colors_;
  std::vector<std::uint32_t> transpose_;
  std::vector<Index> representative_;  // some b with colour(e, b) = t
};

/// Builds the scheme and checks the scheme axioms; throws Error on failure.
CayleyScheme cayley_scheme(const SRing& a);

struct AutomorphismResult {
  PermGroup group;
  BigInt order;
  /// Base of the search (starts at e) and basic orbit lengths.
  std::vector<Index> base;
  std::vector<std::size_t> orbit_sizes;
  /// Generators found by the search; all fix e.
  std::vector<Permutation> stabilizer_generators;
  std::size_t nodes = 0;
};

struct SearchOptions {
  std::size_t search_budget = kDefaultSearchBudget;
  std::size_t chain_budget = kDefaultChainBudget;
  std::size_t max_order = kDefaultMaxOrder;
  const Budget* budget = nullptr;  // optional deadline
};

/// The full colour-automorphism group of the Cayley scheme of A.
AutomorphismResult scheme_automorphisms(const SRing& a, const SearchOptions& opt = {});

/// Colour-preservation check of a single permutation.
bool preserves_colors(const CayleyScheme& s, const Permutation& p);

struct SchurityResult {
  bool schurian = false;
  BigInt aut_order;
  /// Orbits of Aut(A)_e as canonical labels.
  std::vector<std::uint32_t> stabilizer_orbits;
  /// For non-schurian rings: a class meeting at least two stabilizer orbits,
  /// and two of its members lying in different orbits.
  std::optional<std::uint32_t> split_class;
  std::optional<std::pair<Index, Index>> witness;
  std::vector<Permutation> stabilizer_generators;
};

SchurityResult is_schurian(const SRing& a, const SearchOptions& opt = {});

/// Independent re-check of a non-schurity witness: every generator preserves
/// colours and fixes e, the witness pair lies in the split class in two
/// different generator orbits, and a plain point-by-point backtrack (sharing
/// no code with the refinement search) finds no colour automorphism fixing e
/// that maps the first element to the second.
bool verify_split_witness(const SRing& a, const SchurityResult& r,
                          std::size_t node_budget = kDefaultSearchBudget);

/// Whether some colour automorphism of the scheme extends the given partial
/// map, by exhaustive backtracking over images in index order.
bool extends_to_automorphism(const CayleyScheme& s,
                             std::span<const std::pair<Index, Index>> fixed,
                             std::size_t node_budget = kDefaultSearchBudget);

struct GenwrCertificate {
  bool is_gw = false;
  bool u_schurian = false;
  bool quotient_schurian = false;
  /// Aut(A_{U/L})_e has a faithful regular orbit.
  bool regular_orbit = false;
  bool schurian = false;  // direct verdict on A
  std::size_t section_order = 0;
  std::string detail;
};

GenwrCertificate genwr_certificate(const SRing& a, const Subgroup& u, const Subgroup& l,
                                   const SearchOptions& opt = {});

}  // namespace schur
