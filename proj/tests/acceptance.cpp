// Acceptance battery: one pass/fail line per criterion, all checks exact.
// Returns a nonzero exit status when any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rackbi/defcohom.hpp"
#include "rackbi/envelope.hpp"
#include "rackbi/error.hpp"
#include "rackbi/finite_rack.hpp"
#include "rackbi/leibniz.hpp"
#include "rackbi/lodpir.hpp"
#include "rackbi/rack_bialgebra.hpp"
#include "rackbi/starprod.hpp"
#include "rackbi/symcoalg.hpp"
#include "rackbi/uar.hpp"

using namespace rackbi;

namespace {

const std::vector<std::string> kCatalog = {
    "abelian1", "abelian2",   "abelian3", "abelian4",
    "sq2",      "heisenberg", "sl2",      "nonnil3",
    "hemi_sq2", "hemi_heisenberg"};

int failures = 0;

bool expect(bool cond, std::string& detail, const std::string& message) {
  if (!cond && detail.empty()) detail = message;
  return cond;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

template <class Body>
void criterion(int n, const std::string& label, Body&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    pass = body(detail);
  } catch (const Error& e) {
    detail = e.what();
  } catch (const std::exception& e) {
    detail = e.what();
  }
  std::printf("criterion %2d: %s  [%6.2f s]  %s\n", n, pass ? "PASS" : "FAIL",
              seconds_since(t0), label.c_str());
  if (!pass) {
    ++failures;
    if (!detail.empty()) std::printf("              %s\n", detail.c_str());
  }
  std::fflush(stdout);
}

LieAlgebra as_lie(const std::string& name) {
  const LeibnizAlgebra h = catalog(name);
  return make_lie(h.dim, h.names, h.c);
}

PolyFun<Rational> random_poly(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> slot(0, dim - 1);
  std::uniform_int_distribution<int> degree(0, 2);
  PolyFun<Rational> f = pf_zero<Rational>(dim);
  for (int t = 0; t < 3; ++t) {
    std::vector<int> e(dim, 0);
    const int total = degree(rng);
    for (int s = 0; s < total; ++s) ++e[slot(rng)];
    const Rational c(coeff(rng));
    detail::pf_acc(f, e, c);
  }
  return f;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// 1. Every catalog algebra satisfies the left derivation identity on all
//    basis triples; the planted [e1,e2]=e1 table fails first at (1,2,2).
bool structure_validation(std::string& d) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (const auto& name : kCatalog) {
    const LeibnizAlgebra h = catalog(name);
    ok &= expect(leibniz_violations(h.dim, h.c).empty(), d,
                 name + ": catalog table violates the derivation identity");
  }
  std::vector<Rational> c(8, Rational(0));
  c[(0 * 2 + 1) * 2 + 0] = 1;  // [e1, e2] = e1, everything else zero
  const auto v = leibniz_violations(2, c);
  ok &= expect(!v.empty(), d, "planted invalid table passes validation");
  if (!v.empty())
    ok &= expect(v.front().i == 0 && v.front().j == 1 && v.front().k == 1, d,
                 "planted failure located at an unexpected triple");
  ok &= expect(seconds_since(t0) < 1.0, d, "validation exceeded one second");
  return ok;
}

// 2. The enveloping rack passes all rack-bialgebra axioms exhaustively for
//    every catalog algebra of dimension <= 4 at caps 1..3, and its product
//    table is the same whether the quotient uses the squares ideal or the
//    full left center.
bool envelope_rack(std::string& d) {
  bool ok = true;
  int built = 0;
  for (const auto& name : kCatalog) {
    const LeibnizAlgebra h = catalog(name);
    if (h.dim > 4) continue;
    for (int k = 1; k <= 3; ++k) {
      const std::string tag = name + " k=" + std::to_string(k);
      const Uar a = uar_canonical(h, k);
      for (const CheckReport& rep : verify_rack_axioms(a.b))
        ok &= expect(rep.pass && rep.instances > 0, d,
                     tag + ": " + rep.name + " " + rep.counterexample);
      const Uar az = uar(h, k, left_center(h));
      ok &= expect(a.b.mu == az.b.mu, d,
                   tag + ": product table depends on the ideal choice");
      ++built;
    }
  }
  ok &= expect(built == 27, d, "expected 27 envelope constructions");
  return ok;
}

// 3. Symmetrization S(g) -> U(g) is a counital coalgebra morphism and
//    intertwines the adjoint actions through degree 3; on a generator pair
//    it returns the half-sum of the two orderings.
bool symmetrization_morphism(std::string& d) {
  bool ok = true;
  for (const std::string name : {"heisenberg", "sl2"}) {
    const LieAlgebra g = as_lie(name);
    const SymBasis basis = sym_basis(g.dim, 3);
    for (const auto& m : basis.monomials) {
      const SymElt<Rational> me = sym_term<Rational>(g.dim, m, Rational(1));
      const UEAElt wm = symmetrization(g, me);
      ok &= expect(uea_counit(wm) == Rational(m.empty() ? 1 : 0), d,
                   name + ": symmetrization does not preserve the counit");
      UEATensor rhs;
      for (const MonomialSplit& s : monomial_splits(m)) {
        const UEAElt left = symmetrization(
            g, sym_term<Rational>(g.dim, s.left, Rational(1)));
        const UEAElt right = symmetrization(
            g, sym_term<Rational>(g.dim, s.right, Rational(1)));
        for (const auto& [wl, cl] : left.terms)
          for (const auto& [wr, cr] : right.terms) {
            const Rational v = s.mult * cl * cr;
            rhs[{wl, wr}] += v;
          }
      }
      for (auto it = rhs.begin(); it != rhs.end();)
        it = is_zero(it->second) ? rhs.erase(it) : std::next(it);
      ok &= expect(uea_coproduct(wm) == rhs, d,
                   name + ": symmetrization is not a coalgebra morphism");
      for (int a = 0; a < g.dim; ++a) {
        const UEAElt acted = symmetrization(g, derivation_act(g.ad(a), me));
        const UEAElt adj = hopf_adjoint(g, uea_gen(a), wm);
        ok &= expect(acted == adj, d,
                     name + ": symmetrization does not intertwine the "
                            "adjoint actions");
      }
    }
  }
  const LieAlgebra g = as_lie("sl2");
  const UEAElt half = symmetrization(
      g, sym_term<Rational>(g.dim, SymMonomial{0, 1}, Rational(1)));
  UEAElt sum = uea_product(g, uea_gen(0), uea_gen(1));
  uea_add(sum, uea_product(g, uea_gen(1), uea_gen(0)));
  uea_scale(sum, ratio(1, 2));
  ok &= expect(half == sum, d,
               "generator product does not symmetrize to the half-sum");
  return ok;
}

// 4. Deformed product: the square of the first coordinate is exactly hbar
//    times the second coordinate on the sq2 table; the order-one slice
//    equals minus the generalized Poisson bracket on 100 seeded random
//    pairs per catalog algebra; homogeneous left factors of degree r scale
//    the acted result by hbar^r for r <= 3 against targets of degree <= 3.
bool deformed_product(std::string& d) {
  bool ok = true;
  const LeibnizAlgebra sq2 = catalog("sq2");
  const PolyFun<Rational> alpha1 = pf_coord<Rational>(2, 0);
  const PolyFun<HPoly> square = star(sq2, alpha1, alpha1);
  ok &= expect(square == pf_term<HPoly>(2, {0, 1}, HPoly::hbar()), d,
               "square of the first coordinate is not hbar times the second");

  std::mt19937_64 rng(20260815);
  int sampled = 0;
  for (const auto& name : kCatalog) {
    const LeibnizAlgebra h = catalog(name);
    for (int t = 0; t < 100; ++t) {
      const PolyFun<Rational> f = random_poly(rng, h.dim);
      const PolyFun<Rational> g = random_poly(rng, h.dim);
      const PolyFun<HPoly> s = star(h, f, g, 1);
      PolyFun<Rational> slice = pf_zero<Rational>(h.dim);
      for (const auto& [e, v] : s.terms) {
        const Rational c1 = v.coeff(1);
        detail::pf_acc(slice, e, c1);
      }
      PolyFun<Rational> p = poisson(h, f, g);
      pf_scale(p, Rational(-1));
      ok &= expect(slice == p, d,
                   name + ": order-one slice of the deformed product is not "
                          "minus the bracket");
      if (!ok) return ok;
      ++sampled;
    }
  }
  ok &= expect(sampled == 100 * static_cast<int>(kCatalog.size()), d,
               "expected 100 sampled pairs per catalog algebra");

  int scaled = 0;
  for (const std::string name : {"sq2", "heisenberg", "sl2"}) {
    const LeibnizAlgebra h = catalog(name);
    const SymBasis basis = sym_basis(h.dim, 3);
    for (const auto& m : basis.monomials) {
      if (m.empty()) continue;
      const int r = monomial_degree(m);
      for (const auto& b : basis.monomials) {
        const SymElt<Rational> target =
            sym_term<Rational>(h.dim, b, Rational(1));
        const PolyFun<HPoly> lhs = star(
            h, psi(sym_term<Rational>(h.dim, m, Rational(1))), psi(target));
        const SymElt<Rational> acted = adjoint_chain(h, m, target);
        PolyFun<HPoly> rhs = pf_zero<HPoly>(h.dim);
        for (const auto& [e, v] : psi(acted).terms)
          detail::pf_acc(rhs, e, HPoly(HPoly::hbar(r) * v));
        ok &= expect(lhs == rhs, d,
                     name + ": degree-" + std::to_string(r) +
                         " left factor does not scale by hbar^r");
        if (!ok) return ok;
        ++scaled;
      }
    }
  }
  ok &= expect(scaled == 90 + 380 + 380, d,
               "expected 850 homogeneous scaling instances");
  return ok;
}

// 5. The deformed product of truncated exponentials matches the exponential
//    of the formal rack product on every pair of basis vectors, order 4.
bool exponential_compatibility(std::string& d) {
  bool ok = true;
  for (const std::string name : {"sq2", "heisenberg"}) {
    const LeibnizAlgebra h = catalog(name);
    for (int i = 0; i < h.dim; ++i)
      for (int j = 0; j < h.dim; ++j) {
        const CheckReport rep = exp_compat_check(
            h, qvec_unit(h.dim, i), qvec_unit(h.dim, j), 4, 4);
        ok &= expect(rep.pass, d,
                     name + ": " + rep.name + " " + rep.counterexample);
      }
  }
  return ok;
}

// 6. The full face-map relation suite (exchange law, top-face
//    compatibilities, preservation of coderivations, squared differential)
//    holds on every basis coderivation in degrees 1 and 2, for trivial
//    products on small symmetric coalgebras and for enveloping racks.
bool adjoint_complex(std::string& d) {
  bool ok = true;
  std::vector<std::pair<std::string, Bialg<Rational>>> carriers;
  for (const std::string name : {"abelian1", "abelian2", "abelian3"})
    carriers.emplace_back("trivial " + name,
                          trivial_product(uar_canonical(catalog(name), 1).b));
  for (const std::string name : {"sq2", "heisenberg"})
    carriers.emplace_back("envelope " + name,
                          uar_canonical(catalog(name), 1).b);
  int reports = 0;
  for (const auto& [tag, r] : carriers)
    for (int n = 1; n <= 2; ++n)
      for (const CheckReport& rep : verify_relations(r, n)) {
        ok &= expect(rep.pass && rep.instances > 0, d,
                     tag + " degree " + std::to_string(n) + ": " + rep.name +
                         " " + rep.counterexample);
        ++reports;
      }
  ok &= expect(reports == 50, d, "expected 50 relation reports");
  return ok;
}

// 7. The product of the degree-one projection with the rack action is a
//    coderivation cocycle for the trivial product; shifting it by any
//    coboundary is detected as gauge-equivalent with a verified witness.
bool infinitesimal_deformation(std::string& d) {
  bool ok = true;
  const Bialg<Rational> t =
      trivial_product(uar_canonical(catalog("sq2"), 1).b);
  Cochain mu1 = zero_cochain(t, 2);
  mu1.matrix.set(2, tuple_index({1, 1}, 3), Rational(1));
  ok &= expect(is_coderivation(t, mu1).pass, d,
               "projected product is not a coderivation");
  ok &= expect(differential(t, mu1).matrix.is_zero(), d,
               "projected product is not a cocycle");

  const std::vector<Cochain> basis = coderivation_space(t, 1);
  ok &= expect(!basis.empty(), d, "degree-one coderivation space is empty");
  std::mt19937_64 rng(20260816);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (int round = 0; round < 20; ++round) {
    Cochain alpha = zero_cochain(t, 1);
    for (const Cochain& b : basis) {
      const Rational c(pick(rng));
      if (is_zero(c)) continue;
      for (const auto& [rc, v] : b.matrix.entries()) {
        const Rational cv = c * v;
        alpha.matrix.add_at(rc.first, rc.second, cv);
      }
    }
    const Cochain shift = differential(t, alpha);
    const Cochain mu1p{2, mu1.matrix + shift.matrix};
    const EquivalenceResult res = equivalent(t, mu1, mu1p);
    ok &= expect(res.equivalent, d, "coboundary shift not recognized");
    if (!res.equivalent) return ok;
    ok &= expect(is_coderivation(t, res.witness).pass, d,
                 "recovered witness is not a coderivation");
    ok &= expect(witness_intertwines(t, mu1, mu1p, res.witness).pass, d,
                 "recovered witness does not intertwine the deformations");
  }
  return ok;
}

// 8. The braiding built from the rack product satisfies the Yang-Baxter
//    equation exhaustively on dihedral rack algebras and on the envelope.
bool yang_baxter(std::string& d) {
  bool ok = true;
  for (int m : {3, 5}) {
    const CheckReport rep = yang_baxter_check(rack_algebra(dihedral_rack(m)));
    ok &= expect(rep.pass && rep.instances > 0, d,
                 "dihedral " + std::to_string(m) + ": " + rep.counterexample);
  }
  const CheckReport rep = yang_baxter_check(uar_canonical(catalog("sq2"), 1).b);
  ok &= expect(rep.pass && rep.instances > 0, d,
               "envelope sq2: " + rep.counterexample);
  return ok;
}

// 9. The shifted-idempotent series inverts the counit-extended projection up
//    to filtration 3, and the comparison map into the tensor rack is a rack
//    morphism exhaustively on monomials of degree <= 2.
bool tensor_comparison(std::string& d) {
  bool ok = true;
  const LieAlgebra line = canonical_quotient(catalog("sq2")).g;
  CheckReport rep = euler_series_identity(line, 3);
  ok &= expect(rep.pass && rep.instances > 0, d,
               "series identity fails on the one-dimensional quotient: " +
                   rep.counterexample);
  rep = euler_series_identity(as_lie("heisenberg"), 3);
  ok &= expect(rep.pass && rep.instances > 0, d,
               "series identity fails on the nilpotent algebra: " +
                   rep.counterexample);
  for (const std::string name : {"sq2", "heisenberg"}) {
    const Uar a = uar_canonical(catalog(name), 2);
    rep = gamma_rack_morphism(a, 2);
    ok &= expect(rep.pass && rep.instances > 0, d,
                 name + ": comparison map is not a rack morphism: " +
                     rep.counterexample);
  }
  return ok;
}

// 10. Two runs of the full report battery with identical configuration
//     produce byte-identical output and exit cleanly.
bool cli_determinism(std::string& d) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path out1 = dir / "rackbi-acceptance-report-1.json";
  const fs::path out2 = dir / "rackbi-acceptance-report-2.json";
  std::error_code ec;
  fs::remove(out1, ec);
  fs::remove(out2, ec);
  const std::string base = std::string(RACKBI_CLI_BIN) +
                           " --input catalog:sq2 --command report --output ";
  const int r1 = std::system((base + out1.string() + " 2>/dev/null").c_str());
  const int r2 = std::system((base + out2.string() + " 2>/dev/null").c_str());
  bool ok = true;
  ok &= expect(r1 == 0 && r2 == 0, d, "report battery exited nonzero");
  const std::string s1 = read_file(out1);
  const std::string s2 = read_file(out2);
  ok &= expect(!s1.empty(), d, "first report is empty");
  ok &= expect(s1 == s2, d, "reports differ between identical runs");
  fs::remove(out1, ec);
  fs::remove(out2, ec);
  return ok;
}

}  // namespace

int main() {
  std::printf("acceptance battery (exact arithmetic, zero tolerance)\n");
  criterion(1, "structure-constant validation locates planted failures",
            structure_validation);
  criterion(2, "envelope rack axioms hold; product independent of ideal",
            envelope_rack);
  criterion(3, "symmetrization is a coalgebra and adjoint-module morphism",
            symmetrization_morphism);
  criterion(4, "deformed product: frozen square, bracket slice, scaling",
            deformed_product);
  criterion(5, "exponentials are compatible with the formal rack product",
            exponential_compatibility);
  criterion(6, "face relations and squared differential vanish (deg 1-2)",
            adjoint_complex);
  criterion(7, "infinitesimal cocycle and gauge witnesses round-trip",
            infinitesimal_deformation);
  criterion(8, "rack braiding satisfies the Yang-Baxter equation",
            yang_baxter);
  criterion(9, "tensor comparison: series identity and rack morphism",
            tensor_comparison);
  criterion(10, "report battery output is byte-deterministic",
            cli_determinism);
  std::printf("acceptance: %d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
