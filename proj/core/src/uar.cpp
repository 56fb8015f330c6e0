#include "rackbi/uar.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace rackbi {

Bialg<Rational> sym_coalgebra(int dim, int cap,
                              const std::vector<std::string>& gen_names) {
  if (static_cast<int>(gen_names.size()) != dim)
    throw Error(Error::Code::DimensionMismatch, "generator name count");
  const SymBasis basis = sym_basis(dim, cap);
  Bialg<Rational> b;
  b.dim = static_cast<int>(basis.monomials.size());
  b.labels.reserve(b.dim);
  for (const auto& m : basis.monomials)
    b.labels.push_back(monomial_str(m, gen_names));
  b.delta.resize(b.dim);
  for (int i = 0; i < b.dim; ++i)
    for (const auto& split : monomial_splits(basis.monomials[i]))
      detail::acc(b.delta[i],
                  std::make_pair(basis.index.at(split.left),
                                 basis.index.at(split.right)),
                  split.mult);
  b.eps.assign(b.dim, Rational(0));
  b.eps[0] = Rational(1);
  b.one.emplace(0, Rational(1));
  return b;
}

Uar uar(const LeibnizAlgebra& h, int k, const Subspace& z) {
  if (k < 1)
    throw Error(Error::Code::IndexOutOfRange, "degree cap must be >= 1");
  Uar a;
  a.h = h;
  a.k = k;
  a.q = quotient_lie(h, z);
  a.basis = sym_basis(h.dim, k);
  a.b = sym_coalgebra(h.dim, k, h.names);
  a.b.mu.assign(a.b.dim, std::vector<SparseVec<Rational>>(a.b.dim));
  for (int i = 0; i < a.b.dim; ++i)
    for (int j = 0; j < a.b.dim; ++j) {
      const SymElt<Rational> target =
          sym_term<Rational>(h.dim, a.basis.monomials[j], Rational(1), k);
      const SymElt<Rational> image =
          adjoint_chain(h, a.basis.monomials[i], target);
      for (const auto& [m, v] : image.terms)
        a.b.mu[i][j].emplace(a.basis.index.at(m), v);
    }
  a.phi.reserve(a.b.dim);
  for (int i = 0; i < a.b.dim; ++i) {
    const SymElt<Rational> elt =
        sym_term<Rational>(h.dim, a.basis.monomials[i], Rational(1), k);
    a.phi.push_back(symmetrization(a.q.g, sym_map(a.q.proj, elt, k)));
  }
  return a;
}

Uar uar_canonical(const LeibnizAlgebra& h, int k) {
  return uar(h, k, squares_ideal(h));
}

SymElt<Rational> uar_monomial(const Uar& a, int i) {
  return sym_term<Rational>(a.h.dim, a.basis.monomials.at(i), Rational(1),
                            a.k);
}

SparseVec<Rational> uar_coords(const Uar& a, const SymElt<Rational>& s) {
  SparseVec<Rational> out;
  for (const auto& [m, v] : s.terms) {
    auto it = a.basis.index.find(m);
    if (it == a.basis.index.end())
      throw Error(Error::Code::CapExceeded,
                  "monomial degree exceeds the basis cap");
    out.emplace(it->second, v);
  }
  return out;
}

std::vector<std::vector<SparseVec<Rational>>> induced_product_table(
    const Uar& a) {
  std::vector<std::vector<SparseVec<Rational>>> table(
      a.b.dim, std::vector<SparseVec<Rational>>(a.b.dim));
  for (int i = 0; i < a.b.dim; ++i)
    for (int j = 0; j < a.b.dim; ++j)
      table[i][j] = uar_coords(a, ug_act(a.q, a.phi[i], uar_monomial(a, j)));
  return table;
}

namespace {

UEATensor phi_tensor(const Uar& a, int i) {
  UEATensor out;
  for (const auto& [pq, c] : a.b.delta[i])
    for (const auto& [w1, c1] : a.phi[pq.first].terms)
      for (const auto& [w2, c2] : a.phi[pq.second].terms)
        detail::acc(out, std::make_pair(w1, w2), Rational(c * c1 * c2));
  return out;
}

std::string word_str(const Uar& a, const PBWMonomial& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int i : w) {
    if (!out.empty()) out += "·";
    out += a.q.g.names.at(i);
  }
  return out;
}

}  // namespace

std::vector<CheckReport> verify_augmented(const Uar& a, int filtration_bound) {
  std::vector<CheckReport> out;
  const std::vector<PBWMonomial> words =
      pbw_words(a.q.g.dim, filtration_bound);

  CheckReport phi_morph{"phi-coalgebra-morphism"};
  for (int i = 0; i < a.b.dim; ++i) {
    ++phi_morph.instances;
    if (uea_coproduct(a.phi[i]) != phi_tensor(a, i) ||
        uea_counit(a.phi[i]) != a.b.eps[i])
      phi_morph.fail(a.b.labels[i]);
  }
  if (a.phi.at(0) != uea_one()) phi_morph.fail("unit");
  out.push_back(std::move(phi_morph));

  CheckReport assoc{"action-module-associativity"};
  for (const auto& wu : words)
    for (const auto& wv : words) {
      if (static_cast<int>(wu.size() + wv.size()) > filtration_bound) continue;
      const UEAElt u = uea_term(wu, Rational(1));
      const UEAElt v = uea_term(wv, Rational(1));
      const UEAElt uv = uea_product(a.q.g, u, v);
      for (int j = 0; j < a.b.dim; ++j) {
        ++assoc.instances;
        if (ug_act(a.q, uv, uar_monomial(a, j)) !=
            ug_act(a.q, u, ug_act(a.q, v, uar_monomial(a, j))))
          assoc.fail("u=" + word_str(a, wu) + ", v=" + word_str(a, wv) +
                     ", b=" + a.b.labels[j]);
      }
    }
  out.push_back(std::move(assoc));

  CheckReport unit_act{"action-unit"};
  for (int j = 0; j < a.b.dim; ++j) {
    ++unit_act.instances;
    if (ug_act(a.q, uea_one(), uar_monomial(a, j)) != uar_monomial(a, j))
      unit_act.fail(a.b.labels[j]);
  }
  out.push_back(std::move(unit_act));

  CheckReport coprod{"action-coproduct-compatibility"};
  CheckReport cou{"action-counit-compatibility"};
  CheckReport absorb{"action-absorbs-unit"};
  for (const auto& w : words) {
    const UEAElt u = uea_term(w, Rational(1));
    const UEATensor du = uea_coproduct(u);
    for (int j = 0; j < a.b.dim; ++j) {
      const SymElt<Rational> acted = ug_act(a.q, u, uar_monomial(a, j));
      SymTensor<Rational> lhs = coproduct(acted);
      SymTensor<Rational> rhs;
      for (const auto& [pair_u, cu] : du)
        for (const auto& [pq, cb] : a.b.delta[j]) {
          const SymElt<Rational> left = ug_act(
              a.q, uea_term(pair_u.first, Rational(1)), uar_monomial(a, pq.first));
          const SymElt<Rational> right =
              ug_act(a.q, uea_term(pair_u.second, Rational(1)),
                     uar_monomial(a, pq.second));
          for (const auto& [m1, v1] : left.terms)
            for (const auto& [m2, v2] : right.terms)
              detail::acc(rhs, std::make_pair(m1, m2),
                          Rational(cu * cb * v1 * v2));
        }
      ++coprod.instances;
      if (lhs != rhs)
        coprod.fail("u=" + word_str(a, w) + ", b=" + a.b.labels[j]);
      ++cou.instances;
      if (counit(acted) != uea_counit(u) * a.b.eps[j])
        cou.fail("u=" + word_str(a, w) + ", b=" + a.b.labels[j]);
    }
    SymElt<Rational> on_unit = ug_act(a.q, u, uar_monomial(a, 0));
    SymElt<Rational> expect = uar_monomial(a, 0);
    sym_scale(expect, uea_counit(u));
    ++absorb.instances;
    if (on_unit != expect) absorb.fail("u=" + word_str(a, w));
  }
  out.push_back(std::move(coprod));
  out.push_back(std::move(cou));
  out.push_back(std::move(absorb));

  CheckReport intertwine{"phi-intertwines-adjoint"};
  for (const auto& w : words) {
    const UEAElt u = uea_term(w, Rational(1));
    for (int j = 0; j < a.b.dim; ++j) {
      const SparseVec<Rational> coords =
          uar_coords(a, ug_act(a.q, u, uar_monomial(a, j)));
      UEAElt lhs = uea_zero();
      for (const auto& [m, v] : coords) {
        UEAElt scaled = a.phi[m];
        uea_scale(scaled, v);
        uea_add(lhs, scaled);
      }
      ++intertwine.instances;
      if (lhs != hopf_adjoint(a.q.g, u, a.phi[j]))
        intertwine.fail("u=" + word_str(a, w) + ", b=" + a.b.labels[j]);
    }
  }
  out.push_back(std::move(intertwine));
  return out;
}

CheckReport yd_check(const Uar& a, int filtration_bound) {
  if (!is_cocommutative(a.b))
    throw Error(Error::Code::NotCocommutative,
                "carrier coalgebra is not cocommutative");
  CheckReport report{"yetter-drinfeld"};
  using Mixed = std::map<std::pair<PBWMonomial, int>, Rational>;
  for (const auto& w : pbw_words(a.q.g.dim, filtration_bound)) {
    const UEAElt u = uea_term(w, Rational(1));
    std::map<std::tuple<PBWMonomial, PBWMonomial, PBWMonomial>, Rational> tri;
    for (const auto& [p1, c1] : uea_coproduct(u))
      for (const auto& [p2, c2] :
           uea_coproduct(uea_term(p1.second, Rational(1))))
        detail::acc(tri, std::make_tuple(p1.first, p2.first, p2.second),
                    Rational(c1 * c2));
    for (int j = 0; j < a.b.dim; ++j) {
      Mixed lhs;
      const SparseVec<Rational> moved =
          uar_coords(a, ug_act(a.q, u, uar_monomial(a, j)));
      for (const auto& [m, v] : moved)
        for (const auto& [pq, cd] : a.b.delta[m])
          for (const auto& [w1, c1] : a.phi[pq.first].terms)
            detail::acc(lhs, std::make_pair(w1, pq.second),
                        Rational(v * cd * c1));
      Mixed rhs;
      for (const auto& [split, c3] : tri) {
        const UEAElt u1 = uea_term(std::get<0>(split), Rational(1));
        const UEAElt u2 = uea_term(std::get<1>(split), Rational(1));
        const UEAElt su3 =
            uea_antipode(a.q.g, uea_term(std::get<2>(split), Rational(1)));
        for (const auto& [pq, cb] : a.b.delta[j]) {
          const UEAElt left = uea_product(
              a.q.g, uea_product(a.q.g, u1, a.phi[pq.first]), su3);
          if (left.is_zero()) continue;
          const SparseVec<Rational> right =
              uar_coords(a, ug_act(a.q, u2, uar_monomial(a, pq.second)));
          for (const auto& [wl, cl] : left.terms)
            for (const auto& [ridx, cr] : right)
              detail::acc(rhs, std::make_pair(wl, ridx),
                          Rational(c3 * cb * cl * cr));
        }
      }
      ++report.instances;
      if (lhs != rhs)
        report.fail("u=" + word_str(a, w) + ", b=" + a.b.labels[j]);
    }
  }
  return report;
}

}  // namespace rackbi
