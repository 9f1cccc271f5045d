#pragma once

#include <functional>
#include <string>
#include <vector>

#include "schur/io.hpp"

namespace schur {

struct VerifyOptions {
  Budget budget;
  unsigned jobs = 1;
  /// Runs after each finished claim (progress output).
  std::function<void(const Claim&)> on_claim;
};

/// The group Z_3 x Z_{3^n}.
AbelianGroup family_group(int n);

// Each check returns one claim; budget exhaustion yields status Budget with
// the progress reached, never an exception.

/// Backtracking enumeration equals the brute-force oracle on the small groups.
Claim check_oracle_equivalence(const VerifyOptions& opt);
/// Rings over Z_3 x Z_3 with C_1 as a subgroup fall into exactly the nine
/// listed forms up to C_1-preserving Cayley isomorphism.
Claim check_e_forms(const VerifyOptions& opt);
/// Every S-ring over Z_3 x Z_{3^n} is schurian.
Claim check_all_schurian(int n, const VerifyOptions& opt);
/// Cyc(K_i, D): generated orders, validity, regularity, trivial radical, schurity.
Claim check_table1(int n, const VerifyOptions& opt);
/// Regular rings with trivial radical are exactly the Table 1 Cayley classes,
/// with x running over both generators of C up to the choice of c1. Holds at
/// n = 2; at n = 3 two further cyclotomic classes appear.
Claim check_regular_classification(int n, const VerifyOptions& opt);
/// Nonregular rings with trivial radical split as A_H (x) A_L, rk(A_H) = 2, |L| <= 3 <= |H|.
Claim check_nonregular_tensor(int n, const VerifyOptions& opt);
/// Rings with nontrivial radical are proper U/L-wreath products of the stated kind.
Claim check_radical_wreath(int n, const VerifyOptions& opt);
/// Property suites over all rings of the given groups (one claim per property).
std::vector<Claim> check_properties(const std::vector<AbelianGroup>& groups, const VerifyOptions& opt);
/// Every cyclotomic ring over every abelian group of order <= max_order is schurian.
Claim check_cyclotomic_schurian(std::size_t max_order, const VerifyOptions& opt);
/// Aut(A_{D/L})_e has a faithful regular orbit for A = Cyc(K_i, D), i <= 5, |L| = 3.
Claim check_quotient_regular_orbits(int n, const VerifyOptions& opt);
/// Some ring over Z_5 x Z_5 is non-schurian with an independently verified witness.
Claim check_negative_control(const VerifyOptions& opt);

/// Abelian groups (invariant-factor form) of order 2..max_order.
std::vector<AbelianGroup> abelian_groups_up_to(std::size_t max_order);

/// The acceptance claims up to n: oracle, E forms, schurity for every k <= n,
/// Table 1 and the nonregular, radical and quotient checks for 2 <= k <= n,
/// the regular classification at n = 2, the property suites over all groups
/// of order <= 27 (and D), cyclotomic schurity and the Z_5 x Z_5 control.
std::vector<Claim> verify_paper(int n, const VerifyOptions& opt);

}  // namespace schur
