#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rackbi/leibniz.hpp"
#include "rackbi/symcoalg.hpp"

namespace rackbi {

/// Basis word of the universal enveloping algebra in normal form: a weakly
/// increasing list of 0-based generator indices (empty = unit). Arbitrary
/// words are straightened by repeatedly rewriting the leftmost descent
/// x_a x_b -> x_b x_a + [x_a, x_b].
using PBWMonomial = std::vector<int>;

struct UEAElt {
  std::map<PBWMonomial, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const UEAElt&, const UEAElt&) = default;
};

UEAElt uea_zero();
UEAElt uea_one();
UEAElt uea_gen(int i);
UEAElt uea_term(const PBWMonomial& w, const Rational& coeff);

/// Length of the longest word, -1 for zero (the PBW filtration degree).
int filtration(const UEAElt& u);

/// All normal-form words over dim generators of length <= max_filtration,
/// shortest first; begins with the empty word.
std::vector<PBWMonomial> pbw_words(int dim, int max_filtration);

UEAElt& uea_add(UEAElt& a, const UEAElt& b);
UEAElt& uea_scale(UEAElt& a, const Rational& s);
UEAElt uea_sub(UEAElt a, const UEAElt& b);

/// Straightens a linear combination of arbitrary (unsorted) words into
/// normal form over the given Lie algebra.
UEAElt uea_normalize(const LieAlgebra& g,
                     std::map<std::vector<int>, Rational> words);

UEAElt uea_product(const LieAlgebra& g, const UEAElt& a, const UEAElt& b);

using UEATensor = std::map<std::pair<PBWMonomial, PBWMonomial>, Rational>;

/// Coproduct: generators are primitive, so a normal word splits into all
/// ordered pairs of sub-multisets with binomial multiplicities (the
/// splittings of a normal word are again normal).
UEATensor uea_coproduct(const UEAElt& u);
Rational uea_counit(const UEAElt& u);

/// Antipode: reverses words with sign (-1)^length, then straightens.
UEAElt uea_antipode(const LieAlgebra& g, const UEAElt& u);

/// Hopf-algebraic adjoint action ad_u(v) = sum u^(1) v S(u^(2)).
UEAElt hopf_adjoint(const LieAlgebra& g, const UEAElt& u, const UEAElt& v);

/// Symmetrization S(g) -> U(g): a monomial of degree k maps to the average
/// of its k! orderings. A coalgebra isomorphism onto U(g).
UEAElt symmetrization(const LieAlgebra& g, const SymElt<Rational>& a);

/// Functorial extension of a Lie algebra morphism to enveloping algebras.
UEAElt uea_map(const LieAlgebra& target, const ExactMatrix& f,
               const UEAElt& u);

/// Extends a linear endomorphism m of the generator span to a derivation of
/// the symmetric (co)algebra.
template <class K>
SymElt<K> derivation_act(const ExactMatrix& m, const SymElt<K>& s) {
  if (m.rows() != s.dim || m.cols() != s.dim)
    throw Error(Error::Code::DimensionMismatch, "derivation matrix shape");
  SymElt<K> out = sym_zero<K>(s.dim, s.cap);
  for (const auto& [mono, v] : s.terms) {
    for (std::size_t t = 0; t < mono.size(); ++t) {
      for (int k = 0; k < s.dim; ++k) {
        const Rational& c = m.at(k, mono[t]);
        if (is_zero(c)) continue;
        SymMonomial img = mono;
        img[t] = k;
        std::sort(img.begin(), img.end());
        detail::sym_acc(out, img, K(v * c));
      }
    }
  }
  return out;
}

/// Action of the quotient generator class [e_a] on S(h) by the derivation
/// extending y -> [lift(e_a), y].
template <class K>
SymElt<K> g_act(const Quotient& q, int a, const SymElt<K>& s) {
  return derivation_act(q.action(a), s);
}

/// Left U(g)-module structure on S(h): a normal word acts by composing the
/// generator derivations left to right.
template <class K>
SymElt<K> ug_act(const Quotient& q, const UEAElt& u, const SymElt<K>& s) {
  if (s.dim != q.h.dim)
    throw Error(Error::Code::DimensionMismatch, "module element dimension");
  SymElt<K> out = sym_zero<K>(s.dim, s.cap);
  for (const auto& [w, c] : u.terms) {
    SymElt<K> cur = s;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = g_act(q, *it, cur);
    sym_scale(cur, c);
    sym_add(out, cur);
  }
  return out;
}

using UEAEndo = std::function<UEAElt(const UEAElt&)>;

/// Convolution f * g (u) = sum f(u^(1)) g(u^(2)).
UEAElt convolve(const LieAlgebra& g, const UEAEndo& f, const UEAEndo& h,
                const UEAElt& u);

/// sum_m coeff(m) f^{*m}(u), f^{*0} = unit . counit. Terminates because f
/// must kill the unit, so f^{*m}(u) = 0 beyond the filtration of u; throws
/// Error{NonTerminating} otherwise.
UEAElt convolution_series(const LieAlgebra& g,
                          const std::function<Rational(int)>& coeff,
                          const UEAEndo& f, const UEAElt& u);

/// First Eulerian idempotent log_*(id), the convolution logarithm applied
/// to the identity; projects U(g) onto its primitive part.
UEAElt eulerian(const LieAlgebra& g, const UEAElt& u);

std::string uea_str(const UEAElt& u, const std::vector<std::string>& names);

}  // namespace rackbi
