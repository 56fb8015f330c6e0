#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "rackbi/envelope.hpp"
#include "rackbi/leibniz.hpp"
#include "rackbi/rack_bialgebra.hpp"
#include "rackbi/symcoalg.hpp"

namespace rackbi {

/// Coalgebra tables of the symmetric coalgebra on dim generators truncated
/// at total degree cap, over the degree-lex monomial basis (position 0 is
/// the unit). The product table is left empty; see trivial_product and uar.
Bialg<Rational> sym_coalgebra(int dim, int cap,
                              const std::vector<std::string>& gen_names);

/// (1/r!) sum over all r! orderings of the multiset word of the composites
/// of the derivation extensions of ad_{x_t} = [x_t, -], applied to target.
/// The empty word acts as the identity.
template <class K>
SymElt<K> adjoint_chain(const LeibnizAlgebra& h, const SymMonomial& word,
                        const SymElt<K>& target) {
  if (word.empty()) return target;
  std::map<int, ExactMatrix> ad;
  Rational mult_product(1);
  for (std::size_t t = 0; t < word.size(); ++t) {
    if (!ad.count(word[t])) ad.emplace(word[t], h.ad(word[t]));
    std::size_t run = 1;
    while (t + 1 < word.size() && word[t + 1] == word[t]) {
      ++t;
      ++run;
    }
    mult_product *= Rational(factorial(static_cast<int>(run)));
  }
  Rational weight =
      mult_product / Rational(factorial(static_cast<int>(word.size())));
  SymElt<K> total = sym_zero<K>(target.dim, target.cap);
  SymMonomial arrangement = word;
  do {
    SymElt<K> cur = target;
    for (auto it = arrangement.rbegin(); it != arrangement.rend(); ++it)
      cur = derivation_act(ad.at(*it), cur);
    sym_add(total, cur);
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  sym_scale(total, weight);
  return total;
}

/// The universal rack bialgebra of a Leibniz algebra truncated at degree k,
/// augmented over the enveloping algebra of the quotient Lie algebra
/// g = h/z: carrier S(h) up to degree k, stored product from adjoint_chain,
/// coalgebra map phi = symmetrization of the functorial projection, and the
/// enveloping algebra acting through derivations (ug_act).
struct Uar {
  LeibnizAlgebra h;
  int k = 1;
  Quotient q;
  SymBasis basis;
  Bialg<Rational> b;
  std::vector<UEAElt> phi;
};

/// Requires squares(h) <= z <= left_center(h) (Error{IdealOutOfRange}
/// otherwise) and k >= 1 (Error{IndexOutOfRange}).
Uar uar(const LeibnizAlgebra& h, int k, const Subspace& z);

/// uar at the canonical choice z = squares_ideal(h).
Uar uar_canonical(const LeibnizAlgebra& h, int k);

/// Basis monomial i as a capped coalgebra element.
SymElt<Rational> uar_monomial(const Uar& a, int i);

/// Coordinates of a capped element over the monomial basis, sparsely.
SparseVec<Rational> uar_coords(const Uar& a, const SymElt<Rational>& s);

/// The product computed the augmented way, entry by entry: a > b =
/// action of phi(a) on b. For a valid construction this coincides with the
/// stored table a.b.mu regardless of the ideal chosen.
std::vector<std::vector<SparseVec<Rational>>> induced_product_table(
    const Uar& a);

/// Exhaustive checks of the augmented structure, quantifying enveloping-
/// algebra arguments over basis words of filtration <= filtration_bound:
/// phi is a coalgebra morphism, the action is a module-coalgebra action,
/// and phi intertwines the action with the adjoint action.
std::vector<CheckReport> verify_augmented(const Uar& a,
                                          int filtration_bound = 3);

/// The compatibility between the coaction rho = (phi ⊗ id) ∘ delta and the
/// module action: sum (u.b)_(-1) ⊗ (u.b)_(0) equals
/// sum u1 b_(-1) S(u3) ⊗ u2.b_(0), checked for basis words u of filtration
/// <= filtration_bound and all basis elements b.
/// Requires a cocommutative carrier (Error{NotCocommutative}).
CheckReport yd_check(const Uar& a, int filtration_bound = 1);

}  // namespace rackbi
