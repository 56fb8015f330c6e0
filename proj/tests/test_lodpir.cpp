#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rackbi/error.hpp"
#include "rackbi/leibniz.hpp"
#include "rackbi/lodpir.hpp"
#include "rackbi/uar.hpp"

using namespace rackbi;

namespace {

void check_report(const CheckReport& rep, long long expected_instances = -1) {
  CAPTURE(rep.name);
  CAPTURE(rep.counterexample);
  CHECK(rep.pass);
  if (expected_instances >= 0) {
    CHECK(rep.instances == expected_instances);
  } else {
    CHECK(rep.instances > 0);
  }
}

SymElt<Rational> mono(const Uar& a, const SymMonomial& m) {
  return sym_term<Rational>(a.h.dim, m, Rational(1), a.k);
}

}  // namespace

TEST_SUITE("tensor rack constructions") {
  TEST_CASE("series coefficients of the two comparison kernels") {
    // e^s/(1+s): direct division of power series, frozen through order 4.
    const std::vector<Rational> f = series_f(4);
    REQUIRE(f.size() == 5);
    CHECK(f[0] == Rational(1));
    CHECK(f[1] == Rational(0));
    CHECK(f[2] == ratio(1, 2));
    CHECK(f[3] == ratio(-1, 3));
    CHECK(f[4] == ratio(3, 8));

    // (e^s - 1)/s has coefficients 1/(m+1)!.
    const std::vector<Rational> g = series_g(4);
    REQUIRE(g.size() == 5);
    CHECK(g[0] == Rational(1));
    CHECK(g[1] == ratio(1, 2));
    CHECK(g[2] == ratio(1, 6));
    CHECK(g[3] == ratio(1, 24));
    CHECK(g[4] == ratio(1, 120));

    // The two kernels satisfy (1+s)F(s) = sG(s) + 1 = e^s termwise.
    for (std::size_t m = 1; m < 5; ++m) {
      const Rational lhs = f[m] + f[m - 1];
      const Rational rhs = g[m - 1];
      CHECK(lhs == rhs);
    }

    CHECK_THROWS_AS(series_f(-1), Error);
    CHECK_THROWS_AS(series_g(-2), Error);
  }

  TEST_CASE("euler series identity on enveloping algebras") {
    // (1ε + e⁽¹⁾) * F_*(e⁽¹⁾) = id word by word.
    const LieAlgebra sl2 = canonical_quotient(catalog("sl2")).g;
    check_report(euler_series_identity(sl2, 3), 20);  // 1 + 3 + 6 + 10 words

    const LieAlgebra heis = canonical_quotient(catalog("heisenberg")).g;
    check_report(euler_series_identity(heis, 3), 20);

    const LieAlgebra line = canonical_quotient(catalog("sq2")).g;
    REQUIRE(line.dim == 1);
    check_report(euler_series_identity(line, 3), 4);
  }

  TEST_CASE("tensor element helpers and validation") {
    const Uar a = uar_canonical(catalog("sq2"), 1);

    TensorRackElt x = tr_term(1, {}, Rational(2));
    tr_add(x, tr_term(0, {0}, ratio(1, 3)));
    CHECK(x.terms.size() == 2);
    tr_scale(x, Rational(3));
    CHECK(x.terms.at({1, {}}) == Rational(6));
    CHECK(x.terms.at({0, {0}}) == Rational(1));
    const TensorRackElt d = tr_sub(x, x);
    CHECK(d.is_zero());
    CHECK(tr_term(2, {}, Rational(0)).is_zero());

    CHECK(tr_counit(a, tr_unit()) == Rational(1));
    CHECK(tr_counit(a, x) == Rational(0));
    TensorRackElt with_unit = tr_unit();
    tr_scale(with_unit, ratio(5, 7));
    tr_add(with_unit, x);
    CHECK(tr_counit(a, with_unit) == ratio(5, 7));

    CHECK(tr_str(a, tr_unit()) == "(1/1)·1⊗1");
    CHECK(tr_str(a, tr_zero()) == "0");

    CHECK_NOTHROW(tr_validate(a, 1, x));
    CHECK_THROWS_WITH_AS(tr_validate(a, 0, x),
                         doctest::Contains("filtration"), Error);
    CHECK_THROWS_WITH_AS(tr_validate(a, 1, tr_term(9, {}, Rational(1))),
                         doctest::Contains("basis index"), Error);
    CHECK_THROWS_WITH_AS(tr_validate(a, 2, tr_term(0, {0, 4}, Rational(1))),
                         doctest::Contains("generator"), Error);
    TensorRackElt unsorted;
    unsorted.terms[{0, {1, 0}}] = Rational(1);
    const Uar heis = uar_canonical(catalog("heisenberg"), 1);
    CHECK_THROWS_WITH_AS(tr_validate(heis, 2, unsorted),
                         doctest::Contains("increasing"), Error);
  }

  TEST_CASE("augmentation and diagonal action on the tensor carrier") {
    const Uar a = uar_canonical(catalog("sq2"), 1);
    const UEAElt xi = uea_term({0}, 1);

    // Φ(b ⊗ u) = Φ_B(b)·u.
    CHECK(tr_phi(a, tr_unit()) == uea_one());
    CHECK(tr_phi(a, tr_term(1, {}, Rational(1))) == a.phi[1]);
    CHECK(tr_phi(a, tr_term(0, {0}, Rational(1))) == xi);
    // Φ_B(e1) = ξ, so e1 ⊗ ξ maps to ξ².
    CHECK(tr_phi(a, tr_term(1, {0}, Rational(1))) == uea_term({0, 0}, 1));
    // e2 spans the phantom direction: Φ_B(e2) = 0.
    CHECK(tr_phi(a, tr_term(2, {0}, Rational(1))).is_zero());

    // The unit of U(g) acts as the identity.
    TensorRackElt x = tr_term(1, {0}, ratio(2, 3));
    tr_add(x, tr_term(0, {}, Rational(5)));
    CHECK(tr_act(a, uea_one(), x) == x);

    // ξ · (e1 ⊗ 1) = (ξ·e1) ⊗ 1 + e1 ⊗ ad_ξ(1) = e2 ⊗ 1 since the adjoint
    // action kills the unit.
    const TensorRackElt moved = tr_act(a, xi, tr_term(1, {}, Rational(1)));
    CHECK(moved == tr_term(2, {}, Rational(1)));

    // ad_ξ is trivial on the abelian U(g): ξ · (1 ⊗ ξ) = 0.
    CHECK(tr_act(a, xi, tr_term(0, {0}, Rational(1))).is_zero());

    // The action is by coalgebra maps compatible with Φ:
    // Φ(u · x) = u⁽¹⁾ Φ(x) S(u⁽²⁾) for the Hopf adjoint; spot-check on ξ.
    const UEAElt lhs = tr_phi(a, moved);
    const UEAElt rhs = hopf_adjoint(a.q.g, xi, tr_phi(a, tr_term(1, {}, Rational(1))));
    CHECK(lhs == rhs);
  }

  TEST_CASE("rack product on the tensor carrier: unit laws and frozen values") {
    const Uar a = uar_canonical(catalog("sq2"), 1);
    std::vector<TensorRackElt> basis;
    for (int b = 0; b < 3; ++b) {
      basis.push_back(tr_term(b, {}, Rational(1)));
      basis.push_back(tr_term(b, {0}, Rational(1)));
    }

    // 1 ⊗ 1 is left neutral and right absorbing.
    for (const TensorRackElt& x : basis) {
      CHECK(tensor_rack_product(a, 1, tr_unit(), x) == x);
      TensorRackElt eps = tr_unit();
      tr_scale(eps, tr_counit(a, x));
      CHECK(tensor_rack_product(a, 1, x, tr_unit()) == eps);
    }

    // Frozen products on the nilpotent example: g = K·ξ abelian, p(e1) = ξ,
    // p(e2) = 0, lift(ξ) = e1.
    const TensorRackElt e1t = tr_term(1, {}, Rational(1));
    const TensorRackElt e2t = tr_term(2, {}, Rational(1));
    const TensorRackElt xit = tr_term(0, {0}, Rational(1));
    CHECK(tensor_rack_product(a, 1, e1t, e1t) == e2t);   // [e1,e1] = e2
    CHECK(tensor_rack_product(a, 1, xit, e1t) == e2t);   // ℓ_ξ(e1) = e2
    CHECK(tensor_rack_product(a, 1, e1t, xit).is_zero());  // [ξ,ξ] = 0
    CHECK(tensor_rack_product(a, 1, xit, xit).is_zero());
    CHECK(tensor_rack_product(a, 1, e2t, e1t).is_zero());  // Φ_B(e2) = 0
    CHECK(tensor_rack_product(a, 1, e2t, xit).is_zero());

    // Coalgebra-flavored self-distributivity, exhaustively on the
    // six-element tensor basis.
    check_report(tensor_self_distributivity(a, 1, basis), 216);

    // The Sweedler split matters: for primitive x = 1 ⊗ ξ the naive form
    // (x ▷ y) ▷ (x ▷ z) differs, because Δx = x⊗1 + 1⊗x splits the two
    // acting legs. Frozen instance with y = 1 ⊗ 1, z = e1 ⊗ 1:
    //   x ▷ (y ▷ z) = x ▷ z = e2 ⊗ 1, while x ▷ y = ε(x)·1⊗1 = 0.
    const TensorRackElt x = tr_term(0, {0}, Rational(1));
    const TensorRackElt z = tr_term(1, {}, Rational(1));
    const TensorRackElt lhs =
        tensor_rack_product(a, 1, x, tensor_rack_product(a, 1, tr_unit(), z));
    CHECK(lhs == tr_term(2, {}, Rational(1)));
    CHECK(tensor_rack_product(a, 1, x, tr_unit()).is_zero());
    const TensorRackTensor dx = tr_coproduct(a, x);
    CHECK(dx.size() == 2);  // x ⊗ 1⊗1 and 1⊗1 ⊗ x
    TensorRackElt sweedler;
    for (const auto& [legs, c] : dx) {
      const TensorRackElt x1 = tr_term(legs.first.first, legs.first.second, c);
      const TensorRackElt x2 =
          tr_term(legs.second.first, legs.second.second, Rational(1));
      const TensorRackElt t1 = tensor_rack_product(a, 1, x1, tr_unit());
      const TensorRackElt t2 = tensor_rack_product(a, 1, x2, z);
      tr_add(sweedler, tensor_rack_product(a, 1, t1, t2));
    }
    CHECK(sweedler == lhs);

    // Caps are enforced on the inputs.
    CHECK_THROWS_WITH_AS(tensor_rack_product(a, 0, xit, e1t),
                         doctest::Contains("filtration"), Error);
  }

  TEST_CASE("rack product self-distributivity sampled on a Lie example") {
    const Uar a = uar_canonical(catalog("heisenberg"), 1);
    REQUIRE(a.q.g.dim == 3);  // trivial squares ideal: g is h itself
    const std::vector<PBWMonomial> words = pbw_words(3, 2);
    REQUIRE(words.size() == 10);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> bdist(0, 3);
    std::uniform_int_distribution<std::size_t> wdist(0, words.size() - 1);
    std::uniform_int_distribution<int> cdist(-2, 2);
    std::vector<TensorRackElt> sample;
    for (int rep = 0; rep < 6; ++rep) {
      TensorRackElt elt;
      for (int t = 0; t < 2; ++t) {
        const Rational c = Rational(cdist(rng));
        tr_add(elt, tr_term(bdist(rng), words[wdist(rng)], c));
      }
      sample.push_back(elt);
    }
    check_report(tensor_self_distributivity(a, 2, sample), 216);
  }

  TEST_CASE("comparison map values on the nilpotent example") {
    const Uar a = uar_canonical(catalog("sq2"), 2);

    // Γ fixes the unit and the generators.
    CHECK(gamma(a, mono(a, {})) == tr_unit());
    CHECK(gamma(a, mono(a, {0})) == tr_term(1, {}, Rational(1)));
    CHECK(gamma(a, mono(a, {1})) == tr_term(2, {}, Rational(1)));

    // Γ(e1•e1) = 1 ⊗ ξ²: the degree-two part survives only through the
    // F₂ = 1/2 term of the convolution series.
    CHECK(gamma(a, mono(a, {0, 0})) == tr_term(0, {0, 0}, Rational(1)));

    // Φ_B kills e2, so mixed and phantom squares map to zero.
    CHECK(gamma(a, mono(a, {0, 1})).is_zero());
    CHECK(gamma(a, mono(a, {1, 1})).is_zero());

    // Ψ keeps the degree-one part through pr and the G-series.
    CHECK(psi_lp(a, mono(a, {0})) == tr_term(1, {}, Rational(1)));
    CHECK(psi_lp(a, mono(a, {1})) == tr_term(2, {}, Rational(1)));
    CHECK(psi_lp(a, mono(a, {0, 0})) == tr_term(1, {0}, Rational(1)));
    CHECK(psi_lp(a, mono(a, {0, 1})) == tr_term(2, {0}, ratio(1, 2)));
    CHECK(psi_lp(a, mono(a, {1, 1})).is_zero());

    // Ψ is only defined on the augmentation ideal.
    CHECK_THROWS_WITH_AS(psi_lp(a, mono(a, {})),
                         doctest::Contains("counit"), Error);
    SymElt<Rational> mixed = mono(a, {0});
    sym_add(mixed, mono(a, {}));
    CHECK_THROWS_WITH_AS(psi_lp(a, mixed), doctest::Contains("counit"), Error);

    // Dimension guards.
    const SymElt<Rational> wrong = sym_gen<Rational>(3, 0, 2);
    CHECK_THROWS_AS(gamma(a, wrong), Error);
    CHECK_THROWS_AS(psi_lp(a, wrong), Error);
  }

  TEST_CASE("comparison maps are morphisms on the nilpotent example") {
    const Uar a = uar_canonical(catalog("sq2"), 2);
    REQUIRE(a.basis.monomials.size() == 6);

    check_report(gamma_augmentation(a), 6);
    check_report(gamma_module_map(a, 2), 18);  // 3 words x 6 monomials
    check_report(gamma_rack_morphism(a, 2), 36);
    check_report(psi_rack_morphism(a, 2), 25);

    // Direct witness of the rack morphism property on generators:
    // Γ(e1 ▷ e1) = Γ(e2) = e2 ⊗ 1 = Γ(e1) ▷' Γ(e1).
    const TensorRackElt lhs = gamma(a, mono(a, {1}));
    const TensorRackElt rhs = tensor_rack_product(
        a, 2, gamma(a, mono(a, {0})), gamma(a, mono(a, {0})));
    CHECK(lhs == rhs);
    CHECK(lhs == tr_term(2, {}, Rational(1)));
  }

  TEST_CASE("comparison maps are morphisms on the Lie example") {
    const Uar a = uar_canonical(catalog("heisenberg"), 2);
    REQUIRE(a.basis.monomials.size() == 10);

    check_report(gamma_augmentation(a), 10);
    check_report(gamma_module_map(a, 2), 100);  // 10 words x 10 monomials
    check_report(gamma_rack_morphism(a, 2), 100);
    check_report(psi_rack_morphism(a, 2), 81);
  }

  TEST_CASE("primitives realize the hemi-semidirect bracket") {
    check_report(primitive_bracket_check(uar_canonical(catalog("sq2"), 1)),
                 9);  // (2 + 1)^2 pairs
    check_report(
        primitive_bracket_check(uar_canonical(catalog("heisenberg"), 1)), 36);
    check_report(primitive_bracket_check(uar_canonical(catalog("sl2"), 1)),
                 36);
    check_report(primitive_bracket_check(uar_canonical(catalog("nonnil3"), 1)));
  }
}
