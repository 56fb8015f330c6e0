#pragma once

#include <string>
#include <vector>

#include "rackbi/rack_bialgebra.hpp"

namespace rackbi {

/// Pointed rack on {0..size-1}: op[x][y] = x > y, with every row a
/// bijection, self-distributivity x>(y>z) = (x>y)>(x>z), and a unit e with
/// e > x = x and x > e = e.
struct FiniteRack {
  int size = 0;
  int unit = 0;
  std::vector<std::vector<int>> op;
};

/// Throws Error{InvalidRack} naming the first broken axiom.
void validate_rack(const FiniteRack& x);

/// Dihedral rack on Z_m (x > y = 2x - y mod m) with a unit adjoined as the
/// last element, index m.
FiniteRack dihedral_rack(int m);

/// The linearization K[X]: set-like coproduct, counit one, unit the rack
/// unit, product from the table. Validates the rack first.
Bialg<Rational> rack_algebra(const FiniteRack& x);

/// Finite group given by its multiplication table; unit and inverses are
/// located and associativity verified (Error{IdentityViolation} otherwise).
struct FiniteGroup {
  int size = 0;
  int unit = 0;
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;
};

FiniteGroup make_group(const std::vector<std::vector<int>>& mul);

/// Permutations of {0..n-1} in lexicographic order; product is composition
/// (a*b)(t) = a[b[t]].
FiniteGroup symmetric_group(int n);

/// x > y = x y x^{-1}, unit the group unit.
FiniteRack conjugation_rack(const FiniteGroup& g);

/// Augmented pointed rack: a G-action on X and an equivariant map p with
/// p(g.x) = g p(x) g^{-1}; the rack product is derived as x > y = p(x).y.
struct AugmentedFiniteRack {
  FiniteRack x;
  FiniteGroup g;
  std::vector<int> p;
  std::vector<std::vector<int>> action;
};

/// Validates the action (unit acts trivially, compatible with mul), the
/// equivariance of p (Error{NotEquivariantAugmentation} otherwise) and the
/// derived rack (Error{InvalidRack}).
AugmentedFiniteRack from_augmented_rack(const FiniteGroup& g,
                                        const std::vector<int>& p,
                                        const std::vector<std::vector<int>>& action,
                                        int unit);

/// The conjugation rack of g augmented by the identity map.
AugmentedFiniteRack conjugation_augmented(const FiniteGroup& g);

/// Compatibility of the group coaction x -> p(x) ⊗ x with the action: both
/// sides of the crossed-module-style identity reduce, for set-like tensors,
/// to comparing (p(g.x), g.x) with (g p(x) g^{-1}, g.x) per pair.
CheckReport yd_check(const AugmentedFiniteRack& a);

}  // namespace rackbi
