#pragma once

#include <string>
#include <vector>

#include "rackbi/matrix.hpp"
#include "rackbi/subspace.hpp"

namespace rackbi {

/// Finite-dimensional left Leibniz algebra over Q, given by structure
/// constants on a fixed basis: [e_i, e_j] = sum_k structure(i,j,k) e_k.
/// The defining identity is [x,[y,z]] = [[x,y],z] + [y,[x,z]].
struct LeibnizAlgebra {
  int dim = 0;
  std::vector<std::string> names;
  std::vector<Rational> c;  // flat (i*dim + j)*dim + k, all indices 0-based

  const Rational& structure(int i, int j, int k) const;
  QVec bracket_basis(int i, int j) const;
  QVec bracket(const QVec& x, const QVec& y) const;
  /// Matrix of the left multiplication [e_i, -].
  ExactMatrix ad(int i) const;

  friend bool operator==(const LeibnizAlgebra&, const LeibnizAlgebra&) =
      default;
};

/// A Leibniz algebra whose bracket is additionally antisymmetric (hence
/// Jacobi holds). Produced by make_lie or quotient_lie only.
struct LieAlgebra : LeibnizAlgebra {};

/// One failing instance of the left Leibniz identity, with both sides.
struct LeibnizViolation {
  int i = 0, j = 0, k = 0;  // 0-based basis indices (x, y, z)
  QVec lhs, rhs;
};

std::vector<LeibnizViolation> leibniz_violations(int dim,
                                                 const std::vector<Rational>& c);

/// Checked constructor; throws Error{IdentityViolation} listing the first
/// failing triple when the Leibniz identity does not hold. Empty names are
/// filled in as e1..en.
LeibnizAlgebra make_leibniz(int dim, std::vector<std::string> names,
                            std::vector<Rational> c);

bool is_lie(const LeibnizAlgebra& h);
LieAlgebra make_lie(int dim, std::vector<std::string> names,
                    std::vector<Rational> c);

/// Ideal of squares Q(h) = span{ [x,x] }, computed by polarization.
Subspace squares_ideal(const LeibnizAlgebra& h);

/// Left center z(h) = { x : [x, y] = 0 for all y }.
Subspace left_center(const LeibnizAlgebra& h);

/// Quotient of h by an ideal z with Q(h) <= z <= z(h), together with the
/// data needed to let the quotient act back on h: the projection, a linear
/// section of it, and the action matrices action(a) = [lift(e_a), -].
struct Quotient {
  LeibnizAlgebra h;
  Subspace ideal;
  LieAlgebra g;
  ExactMatrix proj;  // g.dim x h.dim
  ExactMatrix lift;  // h.dim x g.dim, proj * lift = identity

  ExactMatrix action(int a) const;
};

/// Throws Error{IdealOutOfRange} unless Q(h) <= z <= z(h) and
/// Error{NotAnIdeal} unless [h, z] <= z.
Quotient quotient_lie(const LeibnizAlgebra& h, const Subspace& z);

/// quotient_lie at the canonical choice z = Q(h).
Quotient canonical_quotient(const LeibnizAlgebra& h);

/// Hemi-semidirect product on h + g for g = h/z acting via the lift:
/// [(x,a),(y,b)] = (a.y, [a,b]).
LeibnizAlgebra hemi_semidirect(const Quotient& q);

/// Named examples: abelian1..abelian4, sq2, heisenberg, sl2, nonnil3,
/// hemi_sq2, hemi_heisenberg. Throws Error{UnknownName} otherwise.
LeibnizAlgebra catalog(const std::string& name);

/// Linear map intertwining the brackets, f([x,y]) = [f(x), f(y)];
/// make_morphism verifies this on all basis pairs.
struct LeibnizMorphism {
  LeibnizAlgebra source;
  LeibnizAlgebra target;
  ExactMatrix matrix;  // target.dim x source.dim
};

LeibnizMorphism make_morphism(const LeibnizAlgebra& source,
                              const LeibnizAlgebra& target,
                              const ExactMatrix& matrix);

}  // namespace rackbi
