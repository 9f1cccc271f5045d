#pragma once

#include <functional>
#include <string>
#include <vector>

#include "schur/sring.hpp"

namespace schur {

struct EnumerateOptions {
  bool prune_inverse = true;
  bool prune_multiplier = true;
  bool prune_module = true;
  unsigned jobs = 1;
  std::size_t max_order = 81;
  std::size_t node_budget = kDefaultSearchBudget;
  const Budget* budget = nullptr;  // optional deadline
};

struct EnumerateStats {
  std::size_t nodes = 0;
  std::size_t candidates = 0;
  std::size_t pruned_inverse = 0;
  std::size_t pruned_multiplier = 0;
  std::size_t pruned_module = 0;
  std::size_t leaves = 0;
  std::size_t rejected_leaves = 0;
  double seconds = 0;
};

struct EnumerateResult {
  std::vector<SRing> rings;  // canonical order, duplicate free
  EnumerateStats stats;
};

/// Every S-ring over G by backtracking on the class of the least unassigned
/// element. Throws BudgetExceeded above max_order or when the node budget or
/// deadline is exhausted.
EnumerateResult enumerate_srings(const AbelianGroup& g, const EnumerateOptions& opt = {});

/// Oracle: all set partitions of G \ {e} filtered through validate(). |G| <= 9.
std::vector<SRing> enumerate_srings_brute(const AbelianGroup& g);

/// Canonical order on rings over one group (lexicographic on labels).
bool canonical_less(const SRing& a, const SRing& b);

struct CayleyClass {
  SRing representative;  // least labels over the orbit
  std::size_t size;      // number of input rings in the orbit
};

/// Orbits of the given maps (by default all of Aut(G)) on a list of rings.
std::vector<CayleyClass> classify_up_to_cayley(const std::vector<SRing>& rings);
std::vector<CayleyClass> classify_up_to_cayley(const std::vector<SRing>& rings,
                                               std::span<const GroupMap> maps);

/// Every Cyc(K, G) with K <= Aut(G), each once, in canonical order. Closed
/// subgroups are reached by joining an orbit partition with the cycles of one
/// more automorphism, starting from the discrete partition.
std::vector<SRing> cyclotomic_rings(const AbelianGroup& g);

/// Automorphisms of G mapping the subgroup H onto itself.
std::vector<GroupMap> automorphisms_preserving(const AbelianGroup& g, const Subgroup& h);

using RingPredicate = std::function<bool(const SRing&)>;
/// Named predicates: always, regular, nonregular, trivial-radical,
/// nontrivial-radical, rational, quasi-thin, primitive, c1-subgroup. A leading
/// '!' negates. Throws InvalidArgument for unknown names.
RingPredicate ring_predicate(const std::string& name);
std::vector<std::string> predicate_names();
std::vector<SRing> filter_rings(const std::vector<SRing>& rings, const RingPredicate& pred);
/// Conjunction of comma-separated predicate names.
std::vector<SRing> filter_rings(const std::vector<SRing>& rings, const std::string& names);

}  // namespace schur
