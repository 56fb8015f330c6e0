#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rackbi/envelope.hpp"
#include "rackbi/rack_bialgebra.hpp"
#include "rackbi/symcoalg.hpp"
#include "rackbi/uar.hpp"

namespace rackbi {

/// Element of B ⊗ U(g), where B is the degree-capped symmetric coalgebra of
/// an augmented envelope rack: finite map (B basis index, normal word) to
/// scalars.
struct TensorRackElt {
  std::map<std::pair<int, PBWMonomial>, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const TensorRackElt&, const TensorRackElt&) = default;
};

TensorRackElt tr_zero();
TensorRackElt tr_term(int b, const PBWMonomial& w, const Rational& coeff);
/// The unit 1 ⊗ 1.
TensorRackElt tr_unit();
TensorRackElt& tr_add(TensorRackElt& x, const TensorRackElt& y);
TensorRackElt& tr_scale(TensorRackElt& x, const Rational& s);
TensorRackElt tr_sub(TensorRackElt x, const TensorRackElt& y);
std::string tr_str(const Uar& a, const TensorRackElt& x);

/// Checks an element against the carrier: B indices within the degree-capped
/// basis and word letters within g (IndexOutOfRange), words sorted with
/// length at most filtration_cap (CapExceeded).
void tr_validate(const Uar& a, int filtration_cap, const TensorRackElt& x);

/// Counit ε ⊗ ε of the tensor coalgebra.
Rational tr_counit(const Uar& a, const TensorRackElt& x);

/// Augmentation Φ(b ⊗ u) = Φ_B(b)·u into U(g).
UEAElt tr_phi(const Uar& a, const TensorRackElt& x);

/// Diagonal action u · (b ⊗ v) = Σ ℓ_{u⁽¹⁾}(b) ⊗ ad_{u⁽²⁾}(v).
TensorRackElt tr_act(const Uar& a, const UEAElt& u, const TensorRackElt& x);

/// Rack product of the tensor carrier:
///   (b ⊗ u) ▷' (c ⊗ v) = Σ ℓ_{Φ_B(b⁽¹⁾)u⁽¹⁾}(c) ⊗ ad_{Φ_B(b⁽²⁾)u⁽²⁾}(v).
/// Both inputs are validated against the caps; the result stays within them
/// because the action and the adjoint preserve degree and filtration.
TensorRackElt tensor_rack_product(const Uar& a, int filtration_cap,
                                  const TensorRackElt& x,
                                  const TensorRackElt& y);

using TensorRackKey = std::pair<int, PBWMonomial>;
using TensorRackTensor = std::map<std::pair<TensorRackKey, TensorRackKey>, Rational>;

/// Coproduct of the tensor-product coalgebra, legwise on both factors.
TensorRackTensor tr_coproduct(const Uar& a, const TensorRackElt& x);

/// Coalgebra-flavored self-distributivity
///   x ▷' (y ▷' z) = Σ (x⁽¹⁾ ▷' y) ▷' (x⁽²⁾ ▷' z)
/// over every ordered triple from the sample.
CheckReport tensor_self_distributivity(const Uar& a, int filtration_cap,
                                       const std::vector<TensorRackElt>& sample);

/// Taylor coefficients of e^s/(1+s) through the given order.
std::vector<Rational> series_f(int order);
/// Taylor coefficients of (e^s - 1)/s through the given order.
std::vector<Rational> series_g(int order);

/// Σ_m coeff[m] · (e⁽¹⁾)^{*m}(u): a truncated convolution series in the
/// eulerian idempotent applied to u.
UEAElt eulerian_series(const LieAlgebra& g, const std::vector<Rational>& coeff,
                       const UEAElt& u);

/// (1ε + e⁽¹⁾) * F_*(e⁽¹⁾) = id on every normal word within the filtration
/// cap — the identity that pins down F = e^s/(1+s).
CheckReport euler_series_identity(const LieAlgebra& g, int filtration_cap);

/// Γ(a) = Σ (1ε + pr)(a⁽¹⁾) ⊗ F_*(e⁽¹⁾)(Φ(a⁽²⁾)), landing in
/// (K1 ⊕ h) ⊗ U(g); output B indices refer to the degree-one basis.
TensorRackElt gamma(const Uar& a, const SymElt<Rational>& s);

/// Ψ(a) = Σ pr(a⁽¹⁾) ⊗ G_*(e⁽¹⁾)(Φ(a⁽²⁾)) for a in the augmentation ideal
/// (NotAugmentationIdeal otherwise), landing in h ⊗ U(g).
TensorRackElt psi_lp(const Uar& a, const SymElt<Rational>& s);

/// Γ intertwines the U(g)-actions: Γ(u · m) = u · Γ(m) for every basis
/// monomial m and normal word u within the filtration cap.
CheckReport gamma_module_map(const Uar& a, int filtration_cap);

/// Φ ∘ Γ = Φ_B on every basis monomial.
CheckReport gamma_augmentation(const Uar& a);

/// Γ(b ▷ b') = Γ(b) ▷' Γ(b') on all pairs of basis monomials.
CheckReport gamma_rack_morphism(const Uar& a, int filtration_cap);

/// Ψ(b ▷ b') = Ψ(b) ▷' Ψ(b') on all pairs of augmentation-ideal basis
/// monomials.
CheckReport psi_rack_morphism(const Uar& a, int filtration_cap);

/// The ▷' product restricted to primitives x ⊗ 1 + 1 ⊗ ξ realizes the
/// hemi-semidirect bracket on h ⊕ g under (x, ξ) ↦ x ⊗ 1 + 1 ⊗ (ξ - p(x)).
CheckReport primitive_bracket_check(const Uar& a);

}  // namespace rackbi
