#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "rackbi/envelope.hpp"

using namespace rackbi;

namespace {

LieAlgebra as_lie(const LeibnizAlgebra& h) {
  return make_lie(h.dim, h.names, h.c);
}

UEAElt rnd_uea(std::mt19937_64& rng, int dim, int max_len) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> gen(0, dim - 1);
  std::uniform_int_distribution<int> len(0, max_len);
  UEAElt u;
  for (int t = 0; t < 3; ++t) {
    PBWMonomial w;
    int l = len(rng);
    for (int s = 0; s < l; ++s) w.push_back(gen(rng));
    std::sort(w.begin(), w.end());
    uea_add(u, uea_term(w, Rational(coeff(rng))));
  }
  return u;
}

// Tensor-square product used to check that the coproduct is multiplicative.
UEATensor tensor_product(const LieAlgebra& g, const UEATensor& a,
                         const UEATensor& b) {
  UEATensor out;
  for (const auto& [pa, va] : a) {
    for (const auto& [pb, vb] : b) {
      UEAElt left = uea_product(g, uea_term(pa.first, Rational(1)),
                                uea_term(pb.first, Rational(1)));
      UEAElt right = uea_product(g, uea_term(pa.second, Rational(1)),
                                 uea_term(pb.second, Rational(1)));
      for (const auto& [wl, vl] : left.terms)
        for (const auto& [wr, vr] : right.terms) {
          out[{wl, wr}] += va * vb * vl * vr;
          if (is_zero(out[{wl, wr}])) out.erase({wl, wr});
        }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("straightening the three-dimensional examples") {
  LieAlgebra heis = as_lie(catalog("heisenberg"));
  // Y X = X Y - Z.
  UEAElt yx = uea_product(heis, uea_gen(1), uea_gen(0));
  UEAElt expect = uea_term({0, 1}, Rational(1));
  uea_add(expect, uea_term({2}, Rational(-1)));
  CHECK(yx == expect);

  LieAlgebra sl2 = as_lie(catalog("sl2"));
  // f e = e f - h.
  UEAElt fe = uea_product(sl2, uea_gen(1), uea_gen(0));
  UEAElt expect2 = uea_term({0, 1}, Rational(1));
  uea_add(expect2, uea_term({2}, Rational(-1)));
  CHECK(fe == expect2);

  // Abelian products merge words like commuting variables.
  LieAlgebra ab = as_lie(catalog("abelian3"));
  CHECK(uea_product(ab, uea_term({2, 2}, Rational(1)),
                    uea_term({0, 1}, Rational(3))) ==
        uea_term({0, 1, 2, 2}, Rational(3)));
}

TEST_CASE("product is associative and unital") {
  LieAlgebra sl2 = as_lie(catalog("sl2"));
  std::mt19937_64 rng(4321);
  for (int t = 0; t < 15; ++t) {
    UEAElt a = rnd_uea(rng, 3, 2);
    UEAElt b = rnd_uea(rng, 3, 2);
    UEAElt c = rnd_uea(rng, 3, 2);
    CHECK(uea_product(sl2, uea_product(sl2, a, b), c) ==
          uea_product(sl2, a, uea_product(sl2, b, c)));
    CHECK(uea_product(sl2, a, uea_one()) == a);
    CHECK(uea_product(sl2, uea_one(), a) == a);
  }
}

TEST_CASE("coproduct splits normal words with multiplicities") {
  auto delta = uea_coproduct(uea_term({0, 1}, Rational(1)));
  REQUIRE(delta.size() == 4);
  CHECK(delta.at({PBWMonomial{0, 1}, PBWMonomial{}}) == Rational(1));
  CHECK(delta.at({PBWMonomial{0}, PBWMonomial{1}}) == Rational(1));
  CHECK(delta.at({PBWMonomial{1}, PBWMonomial{0}}) == Rational(1));
  CHECK(delta.at({PBWMonomial{}, PBWMonomial{0, 1}}) == Rational(1));

  auto sq = uea_coproduct(uea_term({0, 0}, Rational(1)));
  CHECK(sq.at({PBWMonomial{0}, PBWMonomial{0}}) == Rational(2));

  CHECK(uea_counit(uea_one()) == Rational(1));
  CHECK(uea_counit(uea_gen(0)) == Rational(0));
}

TEST_CASE("hopf laws hold") {
  for (const char* name : {"heisenberg", "sl2"}) {
    CAPTURE(name);
    LieAlgebra g = as_lie(catalog(name));
    std::mt19937_64 rng(987);
    for (int t = 0; t < 10; ++t) {
      UEAElt u = rnd_uea(rng, 3, 2);
      UEAElt v = rnd_uea(rng, 3, 2);

      // Coproduct is an algebra morphism.
      CHECK(uea_coproduct(uea_product(g, u, v)) ==
            tensor_product(g, uea_coproduct(u), uea_coproduct(v)));

      // Counit laws.
      UEAElt left, right;
      for (const auto& [pair, c] : uea_coproduct(u)) {
        if (pair.first.empty()) uea_add(left, uea_term(pair.second, c));
        if (pair.second.empty()) uea_add(right, uea_term(pair.first, c));
      }
      CHECK(left == u);
      CHECK(right == u);

      // Antipode axiom: mu (S (x) id) Delta = unit . counit.
      UEAElt anti;
      for (const auto& [pair, c] : uea_coproduct(u)) {
        UEAElt part = uea_product(
            g, uea_antipode(g, uea_term(pair.first, Rational(1))),
            uea_term(pair.second, Rational(1)));
        uea_scale(part, c);
        uea_add(anti, part);
      }
      UEAElt expect = uea_one();
      uea_scale(expect, uea_counit(u));
      CHECK(anti == expect);

      // Antipode reverses products.
      CHECK(uea_antipode(g, uea_product(g, u, v)) ==
            uea_product(g, uea_antipode(g, v), uea_antipode(g, u)));
    }
  }
}

TEST_CASE("coassociativity of the word coproduct") {
  std::mt19937_64 rng(55);
  LieAlgebra sl2 = as_lie(catalog("sl2"));
  for (int t = 0; t < 10; ++t) {
    UEAElt u = rnd_uea(rng, 3, 3);
    std::map<std::tuple<PBWMonomial, PBWMonomial, PBWMonomial>, Rational> l, r;
    for (const auto& [pair, c] : uea_coproduct(u)) {
      for (const auto& s : monomial_splits(pair.first)) {
        l[{s.left, s.right, pair.second}] += c * s.mult;
        if (is_zero(l[{s.left, s.right, pair.second}]))
          l.erase({s.left, s.right, pair.second});
      }
      for (const auto& s : monomial_splits(pair.second)) {
        r[{pair.first, s.left, s.right}] += c * s.mult;
        if (is_zero(r[{pair.first, s.left, s.right}]))
          r.erase({pair.first, s.left, s.right});
      }
    }
    CHECK(l == r);
  }
  (void)sl2;
}

TEST_CASE("antipode on small words") {
  LieAlgebra heis = as_lie(catalog("heisenberg"));
  UEAElt sx = uea_antipode(heis, uea_gen(0));
  CHECK(sx == uea_term({0}, Rational(-1)));
  // S(XY) = YX = XY - Z.
  UEAElt sxy = uea_antipode(heis, uea_term({0, 1}, Rational(1)));
  UEAElt expect = uea_term({0, 1}, Rational(1));
  uea_add(expect, uea_term({2}, Rational(-1)));
  CHECK(sxy == expect);
}

TEST_CASE("hopf adjoint action") {
  LieAlgebra heis = as_lie(catalog("heisenberg"));
  // ad_X(Y) = XY - YX = Z.
  CHECK(hopf_adjoint(heis, uea_gen(0), uea_gen(1)) ==
        uea_term({2}, Rational(1)));

  LieAlgebra sl2 = as_lie(catalog("sl2"));
  CHECK(hopf_adjoint(sl2, uea_gen(0), uea_gen(1)) ==
        uea_term({2}, Rational(1)));
  CHECK(hopf_adjoint(sl2, uea_gen(2), uea_gen(0)) ==
        uea_term({0}, Rational(2)));

  // ad is a left module action and fixes only scalars out of the unit.
  std::mt19937_64 rng(31415);
  for (int t = 0; t < 10; ++t) {
    UEAElt u = rnd_uea(rng, 3, 2);
    UEAElt v = rnd_uea(rng, 3, 2);
    UEAElt w = rnd_uea(rng, 3, 2);
    CHECK(hopf_adjoint(sl2, uea_product(sl2, u, v), w) ==
          hopf_adjoint(sl2, u, hopf_adjoint(sl2, v, w)));
    UEAElt unit_img = hopf_adjoint(sl2, u, uea_one());
    UEAElt expect = uea_one();
    uea_scale(expect, uea_counit(u));
    CHECK(unit_img == expect);
  }
}

TEST_CASE("symmetrization of a quadratic monomial") {
  LieAlgebra heis = as_lie(catalog("heisenberg"));
  // (XY + YX)/2 = XY - Z/2.
  UEAElt img = symmetrization(heis, sym_term<Rational>(3, {0, 1}, Rational(1)));
  UEAElt expect = uea_term({0, 1}, Rational(1));
  uea_add(expect, uea_term({2}, Rational(-1, 2)));
  CHECK(img == expect);

  LieAlgebra sl2 = as_lie(catalog("sl2"));
  UEAElt img2 = symmetrization(sl2, sym_term<Rational>(3, {0, 1}, Rational(1)));
  UEAElt expect2 = uea_term({0, 1}, Rational(1));
  uea_add(expect2, uea_term({2}, Rational(-1, 2)));
  CHECK(img2 == expect2);

  // Powers of a single generator are fixed.
  CHECK(symmetrization(sl2, sym_term<Rational>(3, {1, 1, 1}, Rational(1))) ==
        uea_term({1, 1, 1}, Rational(1)));
}

TEST_CASE("symmetrization is a coalgebra isomorphism onto words") {
  for (const char* name : {"heisenberg", "sl2"}) {
    CAPTURE(name);
    LieAlgebra g = as_lie(catalog(name));
    SymBasis basis = sym_basis(g.dim, 3);

    // Coalgebra morphism on every basis monomial up to degree 3.
    for (const auto& m : basis.monomials) {
      UEAElt img = symmetrization(g, sym_term<Rational>(g.dim, m, Rational(1)));
      UEATensor lhs = uea_coproduct(img);
      UEATensor rhs;
      for (const auto& s : monomial_splits(m)) {
        UEAElt l = symmetrization(g, sym_term<Rational>(g.dim, s.left, Rational(1)));
        UEAElt r =
            symmetrization(g, sym_term<Rational>(g.dim, s.right, Rational(1)));
        for (const auto& [wl, vl] : l.terms)
          for (const auto& [wr, vr] : r.terms) {
            rhs[{wl, wr}] += s.mult * vl * vr;
            if (is_zero(rhs[{wl, wr}])) rhs.erase({wl, wr});
          }
      }
      CHECK(lhs == rhs);
      CHECK(uea_counit(img) == counit(sym_term<Rational>(g.dim, m, Rational(1))));
    }

    // Bijectivity on the filtration-3 truncation: the matrix sending
    // monomials to word coordinates has full rank.
    const int n = static_cast<int>(basis.monomials.size());
    ExactMatrix mat(n, n);
    for (int j = 0; j < n; ++j) {
      UEAElt img = symmetrization(
          g, sym_term<Rational>(g.dim, basis.monomials[j], Rational(1)));
      for (const auto& [w, v] : img.terms) mat.set(basis.index.at(w), j, v);
    }
    CHECK(rank(mat) == n);
  }
}

TEST_CASE("symmetrization intertwines the adjoint actions") {
  for (const char* name : {"heisenberg", "sl2"}) {
    CAPTURE(name);
    LieAlgebra g = as_lie(catalog(name));
    SymBasis basis = sym_basis(g.dim, 3);
    for (int xi = 0; xi < g.dim; ++xi) {
      ExactMatrix ad_xi = g.ad(xi);
      for (const auto& m : basis.monomials) {
        auto elt = sym_term<Rational>(g.dim, m, Rational(1));
        UEAElt lhs = symmetrization(g, derivation_act(ad_xi, elt));
        UEAElt rhs = hopf_adjoint(g, uea_gen(xi), symmetrization(g, elt));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("the quotient class acts on the source by derivations") {
  Quotient q = canonical_quotient(catalog("sq2"));
  // The class of e1 sends e1 to e2 = [e1, e1].
  auto img = g_act(q, 0, sym_gen<Rational>(2, 0));
  CHECK(img == sym_gen<Rational>(2, 1));
  CHECK(g_act(q, 0, sym_gen<Rational>(2, 1)).is_zero());
  // Derivation rule on a product.
  auto sq = sym_term<Rational>(2, {0, 0}, Rational(1));
  auto img2 = g_act(q, 0, sq);
  CHECK(img2 == sym_term<Rational>(2, {0, 1}, Rational(2)));
}

TEST_CASE("the enveloping action is a module-coalgebra action") {
  for (const char* name : {"nonnil3", "heisenberg"}) {
    CAPTURE(name);
    LeibnizAlgebra h = catalog(name);
    Quotient q = quotient_lie(h, left_center(h));
    SymBasis basis = sym_basis(h.dim, 2);
    std::mt19937_64 rng(777);
    for (int t = 0; t < 8; ++t) {
      UEAElt u = rnd_uea(rng, q.g.dim, 2);
      UEAElt v = rnd_uea(rng, q.g.dim, 2);
      std::uniform_int_distribution<int> pick(
          0, static_cast<int>(basis.monomials.size()) - 1);
      auto a = sym_term<Rational>(h.dim, basis.monomials[pick(rng)],
                                  Rational(1), 2);

      // Module law (u v).a = u.(v.a).
      CHECK(ug_act(q, uea_product(q.g, u, v), a) == ug_act(q, u, ug_act(q, v, a)));

      // Unit acts as identity, and the action is counit-compatible.
      CHECK(ug_act(q, uea_one(), a) == a);
      CHECK(counit(ug_act(q, u, a)) == uea_counit(u) * counit(a));

      // Coalgebra compatibility: Delta(u.a) = sum (u1.a1) (x) (u2.a2).
      SymTensor<Rational> lhs = coproduct(ug_act(q, u, a));
      SymTensor<Rational> rhs;
      for (const auto& [upair, uc] : uea_coproduct(u)) {
        for (const auto& [apair, ac] : coproduct(a)) {
          auto left = ug_act(q, uea_term(upair.first, Rational(1)),
                             sym_term<Rational>(h.dim, apair.first, Rational(1), 2));
          auto right = ug_act(q, uea_term(upair.second, Rational(1)),
                              sym_term<Rational>(h.dim, apair.second, Rational(1), 2));
          for (const auto& [ml, vl] : left.terms)
            for (const auto& [mr, vr] : right.terms) {
              rhs[{ml, mr}] += uc * ac * vl * vr;
              if (is_zero(rhs[{ml, mr}])) rhs.erase({ml, mr});
            }
        }
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("the composite of symmetrization and projection intertwines") {
  // Phi = (symmetrization over g) . S(p) turns the enveloping action into
  // the Hopf adjoint: Phi(u.a) = ad_u(Phi(a)).
  for (const char* name : {"sq2", "nonnil3"}) {
    CAPTURE(name);
    LeibnizAlgebra h = catalog(name);
    Quotient q = canonical_quotient(h);
    SymBasis basis = sym_basis(h.dim, 2);
    auto phi = [&](const SymElt<Rational>& a) {
      return symmetrization(q.g, sym_map(q.proj, a));
    };
    std::mt19937_64 rng(31);
    for (const auto& m : basis.monomials) {
      auto a = sym_term<Rational>(h.dim, m, Rational(1), 2);
      UEAElt u = rnd_uea(rng, q.g.dim, 2);
      CHECK(phi(ug_act(q, u, a)) == hopf_adjoint(q.g, u, phi(a)));
    }
  }
}

TEST_CASE("eulerian idempotent on small elements") {
  LieAlgebra ab2 = as_lie(catalog("abelian2"));
  CHECK(eulerian(ab2, uea_one()).is_zero());
  CHECK(eulerian(ab2, uea_gen(0)) == uea_gen(0));
  // In the abelian case the quadratic word is killed.
  CHECK(eulerian(ab2, uea_term({0, 1}, Rational(1))).is_zero());
  CHECK(eulerian(ab2, uea_term({0, 0}, Rational(1))).is_zero());
}

TEST_CASE("eulerian idempotent projects onto primitives") {
  for (const char* name : {"heisenberg", "sl2"}) {
    CAPTURE(name);
    LieAlgebra g = as_lie(catalog(name));
    SymBasis words = sym_basis(g.dim, 3);
    for (const auto& w : words.monomials) {
      UEAElt u = uea_term(w, Rational(1));
      UEAElt e = eulerian(g, u);

      // Idempotency under composition.
      CHECK(eulerian(g, e) == e);

      // The image is primitive: Delta(e) = e (x) 1 + 1 (x) e.
      UEATensor lhs = uea_coproduct(e);
      UEATensor rhs;
      for (const auto& [word, v] : e.terms) {
        rhs[{word, PBWMonomial{}}] += v;
        rhs[{PBWMonomial{}, word}] += v;
        if (is_zero(rhs[{word, PBWMonomial{}}]))
          rhs.erase({word, PBWMonomial{}});
        if (is_zero(rhs[{PBWMonomial{}, word}]))
          rhs.erase({PBWMonomial{}, word});
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("the convolution exponential of the eulerian map is the identity") {
  LieAlgebra sl2 = as_lie(catalog("sl2"));
  SymBasis words = sym_basis(3, 3);
  auto inv_fact = [](int m) -> Rational { return Rational(1) / Rational(factorial(m)); };
  for (const auto& w : words.monomials) {
    UEAElt u = uea_term(w, Rational(1));
    UEAElt series = convolution_series(
        sl2, inv_fact, [&](const UEAElt& x) { return eulerian(sl2, x); }, u);
    CHECK(series == u);
  }
}

TEST_CASE("eulerian composed with symmetrization is the linear projection") {
  LieAlgebra heis = as_lie(catalog("heisenberg"));
  SymBasis basis = sym_basis(3, 3);
  for (const auto& m : basis.monomials) {
    auto a = sym_term<Rational>(3, m, Rational(1));
    UEAElt lhs = eulerian(heis, symmetrization(heis, a));
    UEAElt rhs = m.size() == 1 ? uea_gen(m[0]) : uea_zero();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("series whose endomorphism keeps the unit are rejected") {
  LieAlgebra ab2 = as_lie(catalog("abelian2"));
  auto ident = [](const UEAElt& x) { return x; };
  CHECK_THROWS_AS(convolution_series(
                      ab2, [](int) { return Rational(1); }, ident, uea_gen(0)),
                  Error);
}

TEST_CASE("enveloping functor on a quotient projection") {
  LeibnizAlgebra heis = catalog("heisenberg");
  Quotient q = quotient_lie(heis, left_center(heis));
  // U(p) applied to the symmetrized image agrees with symmetrizing the
  // projected element.
  SymBasis basis = sym_basis(3, 3);
  LieAlgebra heis_lie = as_lie(heis);
  for (const auto& m : basis.monomials) {
    auto a = sym_term<Rational>(3, m, Rational(1));
    UEAElt lhs = uea_map(q.g, q.proj, symmetrization(heis_lie, a));
    UEAElt rhs = symmetrization(q.g, sym_map(q.proj, a));
    CHECK(lhs == rhs);
  }

  // And U(p) is an algebra morphism.
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    UEAElt u = rnd_uea(rng, 3, 2);
    UEAElt v = rnd_uea(rng, 3, 2);
    CHECK(uea_map(q.g, q.proj, uea_product(heis_lie, u, v)) ==
          uea_product(q.g, uea_map(q.g, q.proj, u), uea_map(q.g, q.proj, v)));
  }
}
