#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "rackbi/error.hpp"
#include "rackbi/hpoly.hpp"
#include "rackbi/matrix.hpp"
#include "rackbi/rational.hpp"

using namespace rackbi;

namespace {

Rational rnd_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return ratio(num(rng), den(rng));
}

HPoly rnd_hpoly(std::mt19937_64& rng, int max_deg) {
  HPoly p;
  for (int k = 0; k <= max_deg; ++k) p += rnd_rat(rng) * HPoly::hbar(k);
  return p;
}

}  // namespace

TEST_CASE("rational parse and format") {
  CHECK(rat_parse("3/4") == Rational(3, 4));
  CHECK(rat_parse("-3/4") == Rational(-3, 4));
  CHECK(rat_parse("6/8") == Rational(3, 4));
  CHECK(rat_parse("5") == Rational(5));
  CHECK(rat_parse("-0") == Rational(0));
  CHECK(rat_str(Rational(3, 4)) == "3/4");
  CHECK(rat_str(Rational(5)) == "5/1");
  CHECK(rat_str(Rational(-1, 2)) == "-1/2");
  CHECK(rat_str(rat_parse("-10/4")) == "-5/2");

  CHECK_THROWS_AS(rat_parse("1/0"), Error);
  CHECK_THROWS_AS(rat_parse(""), Error);
  CHECK_THROWS_AS(rat_parse("a/b"), Error);
  CHECK_THROWS_AS(rat_parse("1.5"), Error);
  CHECK_THROWS_AS(rat_parse("1/ 2"), Error);
}

TEST_CASE("rational field laws on seeded samples") {
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 200; ++t) {
    Rational a = rnd_rat(rng), b = rnd_rat(rng), c = rnd_rat(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    if (!is_zero(a)) CHECK(a * (Rational(1) / a) == Rational(1));
  }
}

TEST_CASE("binomial and factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(4, 2) == Rational(6));
  CHECK(binomial(4, 0) == Rational(1));
  CHECK(binomial(4, 5) == Rational(0));
  CHECK(binomial(4, -1) == Rational(0));
}

TEST_CASE("hpoly basics") {
  HPoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero.str() == "0/1");

  HPoly h = HPoly::hbar();
  CHECK(h.degree() == 1);
  CHECK(h.coeff(0) == Rational(0));
  CHECK(h.coeff(1) == Rational(1));
  CHECK(h.str() == "0/1 + 1/1·ħ");

  HPoly p = HPoly(Rational(1, 2)) + Rational(3) * HPoly::hbar(2);
  CHECK(p.str() == "1/2 + 0/1·ħ + 3/1·ħ^2");
  CHECK(p.coeff(2) == Rational(3));
  CHECK(p.coeff(7) == Rational(0));
}

TEST_CASE("hpoly product and truncation") {
  HPoly one_plus = HPoly(1) + HPoly::hbar();
  HPoly one_minus = HPoly(1) - HPoly::hbar();
  HPoly prod = one_plus * one_minus;
  CHECK(prod == HPoly(1) - HPoly::hbar(2));

  // Dual numbers: truncation order 1 realises arithmetic mod h^2.
  HPoly dual = one_plus.truncated(1) * one_minus.truncated(1);
  CHECK(dual == HPoly(1));
  CHECK(dual.truncation() == 1);

  // Combining values truncated at different orders keeps the coarser one.
  HPoly a = (HPoly(1) + HPoly::hbar()).truncated(3);
  HPoly b = (HPoly(1) + HPoly::hbar()).truncated(1);
  CHECK((a * b).truncation() == 1);
  CHECK(a * b == HPoly(1) + Rational(2) * HPoly::hbar());
  CHECK((a + b).truncation() == 1);

  CHECK(HPoly::hbar(3, 2).is_zero());
  CHECK(HPoly::hbar(2, 2) == HPoly::hbar(2));
}

TEST_CASE("hpoly ring laws on seeded samples") {
  std::mt19937_64 rng(777);
  for (int t = 0; t < 60; ++t) {
    HPoly a = rnd_hpoly(rng, 4), b = rnd_hpoly(rng, 4), c = rnd_hpoly(rng, 4);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * HPoly(1) == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("kernel of a rank-one two-by-two matrix") {
  ExactMatrix m(2, 2);
  m.set(0, 0, Rational(1));
  m.set(0, 1, Rational(2));
  m.set(1, 0, Rational(2));
  m.set(1, 1, Rational(4));
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == QVec{Rational(-2), Rational(1)});
  CHECK(rank(m) == 1);
}

TEST_CASE("kernel edge cases") {
  CHECK(kernel_basis(ExactMatrix::identity(3)).empty());

  auto basis = kernel_basis(ExactMatrix(2, 3));
  REQUIRE(basis.size() == 3);
  CHECK(basis[0] == qvec_unit(3, 0));
  CHECK(basis[1] == qvec_unit(3, 1));
  CHECK(basis[2] == qvec_unit(3, 2));

  CHECK(kernel_basis(ExactMatrix(0, 2)).size() == 2);
  CHECK(kernel_basis(ExactMatrix(2, 0)).empty());
}

TEST_CASE("kernel vectors are deterministic and exact") {
  std::mt19937_64 rng(424242);
  for (int t = 0; t < 25; ++t) {
    ExactMatrix m(4, 6);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 6; ++c) m.set(r, c, rnd_rat(rng));
    auto b1 = kernel_basis(m);
    auto b2 = kernel_basis(m);
    CHECK(b1 == b2);
    for (const auto& v : b1) CHECK(qvec_is_zero(m.apply(v)));
    CHECK(static_cast<int>(b1.size()) == 6 - rank(m));
  }
}

TEST_CASE("solve linear systems") {
  ExactMatrix m(2, 2);
  m.set(0, 0, Rational(1));
  m.set(0, 1, Rational(2));
  m.set(1, 0, Rational(3));
  m.set(1, 1, Rational(4));
  auto x = solve(m, {Rational(5), Rational(11)});
  REQUIRE(x.has_value());
  CHECK(*x == QVec{Rational(1), Rational(2)});

  ExactMatrix singular(2, 2);
  singular.set(0, 0, Rational(1));
  singular.set(0, 1, Rational(2));
  singular.set(1, 0, Rational(2));
  singular.set(1, 1, Rational(4));
  CHECK(!solve(singular, {Rational(1), Rational(0)}).has_value());
  auto y = solve(singular, {Rational(1), Rational(2)});
  REQUIRE(y.has_value());
  CHECK(singular.apply(*y) == QVec{Rational(1), Rational(2)});
}

TEST_CASE("rref shape") {
  ExactMatrix m(3, 3);
  m.set(0, 0, Rational(2));
  m.set(0, 1, Rational(4));
  m.set(1, 0, Rational(1));
  m.set(1, 1, Rational(2));
  m.set(2, 2, Rational(7));
  Echelon e = rref(m);
  REQUIRE(e.pivot_cols == std::vector<int>{0, 2});
  CHECK(e.rows[0] == QVec{Rational(1), Rational(2), Rational(0)});
  CHECK(e.rows[1] == QVec{Rational(0), Rational(0), Rational(1)});
}

TEST_CASE("matrix arithmetic and index checks") {
  ExactMatrix a = ExactMatrix::identity(2);
  ExactMatrix b(2, 2);
  b.set(0, 1, Rational(3));
  CHECK((a * b) == b);
  CHECK((a + b).at(0, 1) == Rational(3));
  CHECK((b - b).is_zero());
  CHECK(b.transpose().at(1, 0) == Rational(3));
  CHECK_THROWS_AS(b.at(2, 0), Error);
  CHECK_THROWS_AS(b.set(0, 5, Rational(1)), Error);
  CHECK_THROWS_AS(a.apply(QVec{Rational(1)}), Error);
}
