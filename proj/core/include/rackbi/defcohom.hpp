#pragma once

#include <string>
#include <vector>

#include "rackbi/hpoly.hpp"
#include "rackbi/matrix.hpp"
#include "rackbi/rack_bialgebra.hpp"

namespace rackbi {

/// Multilinear map R^{⊗n} → R in basis coordinates. Column
/// tuple_index(t, dim) holds the image of the basis tuple t (first leg most
/// significant), so `matrix` has dim rows and dim^n columns.
struct Cochain {
  int n = 1;
  ExactMatrix matrix;
};

/// dim^n, guarded so the result always fits a matrix column count; throws
/// TooLarge when the tuple space exceeds ten million columns.
int tuple_count(int dim, int n);

/// Flattened column index of a basis tuple; inverse of tuple_at.
int tuple_index(const std::vector<int>& tuple, int dim);
std::vector<int> tuple_at(int index, int dim, int n);

Cochain zero_cochain(const Bialg<Rational>& r, int n);

/// Image of one basis tuple under a cochain.
SparseVec<Rational> cochain_value(const Cochain& w, const std::vector<int>& tuple, int dim);

/// The right-nested iterated product r1 ▷ (r2 ▷ (… ▷ rn)) as a degree-n
/// cochain; degree 1 is the identity map.
Cochain mu_n(const Bialg<Rational>& r, int n);

/// Checks the coderivation law along the iterated product on every basis
/// tuple: Δ(ω(t)) = Σ ω(t⁽¹⁾) ⊗ μⁿ(t⁽²⁾) + μⁿ(t⁽¹⁾) ⊗ ω(t⁽²⁾), where the
/// tensor factors of t are split leg by leg.
CheckReport is_coderivation(const Bialg<Rational>& r, const Cochain& w);

/// Exact basis of the degree-n coderivations along the iterated product.
/// Requires a cocommutative coalgebra (NotCocommutative otherwise) and
/// refuses linear systems with more than `size_cap` unknowns (TooLarge).
std::vector<Cochain> coderivation_space(const Bialg<Rational>& r, int n,
                                        long long size_cap = 20000);

/// Face maps raising the degree by one (slot i is 1-based, 1 ≤ i ≤ w.n,
/// value ∈ {0, 1}; IndexOutOfRange otherwise). With inputs r1, …, r_{n+1}:
///   value 1: μ^i(r1⁽¹⁾, …, r_{i-1}⁽¹⁾, r_i) ▷ ω(r1⁽²⁾, …, r_{i-1}⁽²⁾,
///            r_{i+1}, …, r_{n+1});
///   value 0: ω(r1, …, r_{i-1}, r_i⁽¹⁾ ▷ r_{i+1}, …, r_i⁽ⁿ⁺¹⁻ⁱ⁾ ▷ r_{n+1}),
///            slot i being split into n+1-i coproduct components.
Cochain face(const Bialg<Rational>& r, const Cochain& w, int i, int value);

/// The extra top face: ω(r1⁽¹⁾, …, r_{n-1}⁽¹⁾, r_n) ▷ μⁿ(r1⁽²⁾, …,
/// r_{n-1}⁽²⁾, r_{n+1}).
Cochain face_last(const Bialg<Rational>& r, const Cochain& w);

/// Alternating sum of faces:
///   d = Σ_{i=1..n} (-1)^{i+1} (face(·, i, 1) - face(·, i, 0))
///       + (-1)^{n+1} face_last.
/// Squares to zero on coderivations.
Cochain differential(const Bialg<Rational>& r, const Cochain& w);

/// Properties of the iterated product on all basis tuples for 2 ≤ n ≤ max_n:
///   split-off head (1 ≤ i < n):
///     μ^i(r1⁽¹⁾, …, r_{i-1}⁽¹⁾, r_i) ▷ μ^{n-1}(r1⁽²⁾, …, r_{i-1}⁽²⁾,
///     r_{i+1}, …, r_n) = μⁿ(r1, …, r_n);
///   distributed slot (1 ≤ i ≤ n):
///     μⁿ(r1, …, r_{i-1}, r_i⁽¹⁾ ▷ r_{i+1}, …, r_i⁽ⁿ⁺¹⁻ⁱ⁾ ▷ r_{n+1})
///     = μ^{n+1}(r1, …, r_{n+1}).
std::vector<CheckReport> verify_mu_n_properties(const Bialg<Rational>& r, int max_n);

/// Structural relations of the face maps, evaluated on every basis
/// coderivation of degree n: the simplicial-cubical exchange law
/// d_{j,μ} d_{i,ν} = d_{i+1,ν} d_{j,μ} for j ≤ i, the compatibilities of the
/// top face with the inner faces and with itself, squaring of the
/// differential to zero, and closure of the faces under the coderivation law.
std::vector<CheckReport> verify_relations(const Bialg<Rational>& r, int n,
                                          long long size_cap = 20000);

/// Dimensions of the degree-n adjoint complex: cochains Cⁿ, cocycles Zⁿ,
/// coboundaries Bⁿ (zero when n = 1, the complex starts at degree 1) and
/// cohomology Hⁿ = Zⁿ - Bⁿ.
struct CohomologyDims {
  int cochains = 0;
  int cocycles = 0;
  int coboundaries = 0;
  int cohomology = 0;
};
CohomologyDims cohomology(const Bialg<Rational>& r, int n,
                          long long size_cap = 20000);

/// The product μ0 + ħ·μ1 over the dual numbers K[ħ]/(ħ²), coalgebra
/// unchanged.
Bialg<HPoly> deformed_by(const Bialg<Rational>& r, const Cochain& mu1);

/// Rack-bialgebra axioms of deformed_by(r, mu1) over the dual numbers.
std::vector<CheckReport> verify_deformation(const Bialg<Rational>& r, const Cochain& mu1);

/// First-order deformation validated at construction: throws
/// IdentityViolation naming the first axiom μ0 + ħ·μ1 breaks mod ħ².
struct InfinitesimalDeformation {
  Cochain mu1;
  Bialg<HPoly> bialg;
};
InfinitesimalDeformation make_infinitesimal(const Bialg<Rational>& r, const Cochain& mu1);

/// Gauge equivalence of two first-order deformations of the same product:
/// equivalent iff μ1 - μ1' is the differential of a degree-1 coderivation α,
/// in which case φ = id + ħ·α intertwines the deformed products. Both inputs
/// must be degree-2 coderivations with vanishing differential (NotCocycle
/// otherwise).
struct EquivalenceResult {
  bool equivalent = false;
  Cochain witness;  // degree 1; differential(witness) = mu1 - mu1' when equivalent
};
EquivalenceResult equivalent(const Bialg<Rational>& r, const Cochain& mu1,
                             const Cochain& mu1p);

/// Checks φ ∘ (μ0 + ħμ1) = (μ0 + ħμ1') ∘ (φ ⊗ φ) over the dual numbers on
/// all basis pairs, for φ = id + ħ·α.
CheckReport witness_intertwines(const Bialg<Rational>& r, const Cochain& mu1,
                                const Cochain& mu1p, const Cochain& alpha);

}  // namespace rackbi
