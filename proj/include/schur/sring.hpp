#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "schur/group.hpp"

namespace schur {

using Class = std::vector<Index>;
using Partition = std::vector<Class>;

struct Violation;

/// An S-ring over an abelian group: a partition of G into basic sets
/// satisfying the three S-ring axioms. Only obtainable through validate(),
/// so every instance is known to be valid. Classes are stored canonically:
/// members ascending, classes ordered by least member (so class 0 = {e}).
class SRing {
 public:
  const AbelianGroup& group() const { return group_; }
  const Partition& classes() const { return classes_; }
  const Class& basic_set(std::uint32_t i) const { return classes_.at(i); }
  std::size_t rank() const { return classes_.size(); }
  /// Index of the basic set containing g (T_g).
  std::uint32_t class_of(Index g) const { return labels_[g]; }
  /// class_of over all of G; doubles as the canonical key of the ring.
  const std::vector<std::uint32_t>& labels() const { return labels_; }
  std::uint32_t inverse_class(std::uint32_t i) const { return inverse_[i]; }

  /// c^Z_{X,Y}: the number of pairs (x, y) in X x Y with xy = z for any
  /// fixed z in Z (classes given by index).
  std::int64_t structure_constant(std::uint32_t x, std::uint32_t y, std::uint32_t z) const;

  friend bool operator==(const SRing& a, const SRing& b) {
    return a.group_ == b.group_ && a.labels_ == b.labels_;
  }

 private:
  friend std::variant<SRing, Violation> validate(const AbelianGroup& g, Partition partition);
  SRing(AbelianGroup g, Partition classes);

  AbelianGroup group_;
  Partition classes_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::uint32_t> inverse_;
};

/// First violated S-ring axiom, with minimal witnesses.
struct Violation {
  enum class Kind { NotPartition, IdentityNotAlone, InverseClosure, ModuleClosure };
  Kind kind;
  std::string message;
  // Class indices refer to the canonically sorted input partition; -1 when unused.
  int x = -1, y = -1, z = -1;
  // Witness elements (for ModuleClosure: two members of class z whose
  // coefficients in XY differ).
  std::optional<Index> a, b;
  std::int64_t coeff_a = 0, coeff_b = 0;
};

const char* to_string(Violation::Kind k);

std::variant<SRing, Violation> validate(const AbelianGroup& g, Partition partition);
/// validate() that throws ValidationError carrying the violation message.
SRing make_sring(const AbelianGroup& g, Partition partition);
/// Partition from per-element labels (any labelling; classes are the fibres).
Partition partition_from_labels(std::span<const std::uint32_t> labels);

/// ZG itself (all singletons) and the rank-2 ring {e}, G \ {e}.
SRing group_ring(const AbelianGroup& g);
SRing trivial_sring(const AbelianGroup& g);

/// Dense c[z][x][y] table.
class StructureConstants {
 public:
  explicit StructureConstants(const SRing& a);
  std::size_t rank() const { return rank_; }
  std::int64_t operator()(std::size_t z, std::size_t x, std::size_t y) const {
    return c_[(z * rank_ + x) * rank_ + y];
  }

 private:
  std::size_t rank_;
  std::vector<std::int64_t> c_;
};

bool is_a_set(const SRing& a, std::span<const Index> set);
std::vector<Subgroup> a_subgroups(const SRing& a);
bool is_a_subgroup(const SRing& a, const Subgroup& h);

/// A_H, reindexed to the canonical presentation of H.
SRing restrict(const SRing& a, const Subgroup& h);

struct SectionRef {
  Subgroup u;
  Subgroup l;
};
bool is_a_section(const SRing& a, const SectionRef& s);
/// A_{U/L} over the canonical presentation of U/L.
SRing quotient_ring(const SRing& a, const SectionRef& s);

/// X^(m) = {x^m : x in X}, sorted.
Class rational_conjugate(const AbelianGroup& g, std::span<const Index> set, long long m);
/// Units modulo exp(G), i.e. the distinct power maps coprime to |G|.
std::vector<int> coprime_residues(const AbelianGroup& g);
bool is_rational(const AbelianGroup& g, std::span<const Index> set);
bool is_rational(const SRing& a);

/// X^[p] = {x^p : x in X, |X cap Hx| != 0 mod p} with H = {g : g^p = e}.
Class power_set_p(const AbelianGroup& g, std::span<const Index> set, int p);

bool is_primitive(const SRing& a);
bool is_quasi_thin(const SRing& a);
/// Indices of orthogonal classes (X != {e} with X inside YY^-1 for some class
/// Y). Throws InvalidArgument unless A is quasi-thin.
std::vector<std::uint32_t> orthogonals(const SRing& a);

/// Parameters of Z_3 x Z_{3^n} (n >= 1) or the cyclic 3-group Z_{3^k}.
struct ThreeGroupFamily {
  bool cyclic = false;
  int n = 0;     // exponent is 3^n
  Index c1 = 0;  // canonical order-3 element of the cyclic factor C
  Index s = 0;   // generator of S; 0 for the cyclic family
  Index c = 0;   // generator of C
};
/// Throws InvalidArgument for groups outside the family.
ThreeGroupFamily three_group_family(const AbelianGroup& g);

bool is_highest(const AbelianGroup& g, std::span<const Index> set);
bool is_regular_set(const AbelianGroup& g, std::span<const Index> set);
/// Every highest class consists of elements of one order.
bool is_regular(const SRing& a);
/// <rad(X) : X highest>.
Subgroup ring_radical(const SRing& a);

/// The ring f(A) for an automorphism f.
SRing image(const SRing& a, const GroupMap& f);
/// Canonical labels of f(A) without revalidation.
std::vector<std::uint32_t> image_labels(std::span<const std::uint32_t> labels, const GroupMap& f);
/// Relabel so that classes are numbered by least member.
std::vector<std::uint32_t> canonical_labels(std::span<const std::uint32_t> labels);

/// Some f in Aut(G) with f(S(A)) = S(B), or none. Both rings must be over
/// the same group spec.
std::optional<GroupMap> cayley_isomorphic(const SRing& a, const SRing& b);
/// Same search restricted to the given maps.
std::optional<GroupMap> cayley_isomorphic(const SRing& a, const SRing& b,
                                          std::span<const GroupMap> maps);

}  // namespace schur
