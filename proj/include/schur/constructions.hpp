#pragma once

#include <array>
#include <string>
#include <vector>

#include "schur/sring.hpp"

namespace schur {

/// Orbit partition of <K> on G. Throws InvalidArgument unless every map is an
/// automorphism of G.
SRing cyclotomic(const AbelianGroup& g, std::span<const GroupMap> k);

/// Both products live over G1 x G2 with the orders of G1 listed first.
SRing tensor(const SRing& a1, const SRing& a2);
SRing wreath(const SRing& a1, const SRing& a2);

/// Every class outside U is a union of L-cosets. Throws InvalidArgument when U,
/// L are not A-subgroups with L <= U.
bool is_generalized_wreath(const SRing& a, const Subgroup& u, const Subgroup& l);
/// All proper sections (L != e, U != G) for which A is a U/L-wreath product.
std::vector<SectionRef> gw_sections(const SRing& a);

/// Word s^s_exp x^x_exp c1^c1_exp in D = Z3 x Z_{3^n}.
struct Word {
  int s = 0;
  int x = 0;
  int c1 = 0;
};
/// One generator "(x,s) -> (x_image, s_image)" of a Table 1 row.
struct Table1Generator {
  Word x_image;
  Word s_image;
};
struct Table1Row {
  std::string name;
  std::vector<Table1Generator> generators;
  std::size_t size;  // order of the generated group as listed
};
const std::array<Table1Row, 10>& table1_rows();

/// x stands for c^x_power (any generator of C); c1 is always c^(3^(n-1)).
Index evaluate(const AbelianGroup& d, const Word& w, int x_power = 1);
/// Generator maps of row i compiled against D = Z3 x Z_{3^n} (n >= 2). The
/// Cayley class of the row depends on whether c1 = x^(3^(n-1)) or its square,
/// so x_power = -1 gives the other half of the rows.
std::vector<GroupMap> table1_generators(int row, int n, int x_power = 1);
/// Cyc(K_i, D). Throws Error (as a discrepancy report) when |<K_i>| differs
/// from the listed size.
SRing table1(int row, int n, int x_power = 1);

}  // namespace schur
