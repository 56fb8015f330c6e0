#include "rackbi/lodpir.hpp"

#include <algorithm>
#include <sstream>

#include "rackbi/error.hpp"
#include "rackbi/leibniz.hpp"

namespace rackbi {

namespace {

std::string word_str(const std::vector<std::string>& names,
                     const PBWMonomial& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += "·";
    out += names[static_cast<std::size_t>(w[i])];
  }
  return out;
}

/// Assembles the stored product column mu[i][j] back into a symmetric-
/// coalgebra element.
SymElt<Rational> column_elt(const Uar& a, const SparseVec<Rational>& col) {
  SymElt<Rational> out = sym_zero<Rational>(a.h.dim, a.k);
  for (const auto& [idx, c] : col) {
    const SymElt<Rational> t =
        sym_term<Rational>(a.h.dim, a.basis.monomials[static_cast<std::size_t>(idx)], c, a.k);
    sym_add(out, t);
  }
  return out;
}

}  // namespace

TensorRackElt tr_zero() { return {}; }

TensorRackElt tr_term(int b, const PBWMonomial& w, const Rational& coeff) {
  TensorRackElt out;
  if (!is_zero(coeff)) out.terms[{b, w}] = coeff;
  return out;
}

TensorRackElt tr_unit() { return tr_term(0, {}, 1); }

TensorRackElt& tr_add(TensorRackElt& x, const TensorRackElt& y) {
  for (const auto& [key, c] : y.terms) detail::acc(x.terms, key, c);
  return x;
}

TensorRackElt& tr_scale(TensorRackElt& x, const Rational& s) {
  if (is_zero(s)) {
    x.terms.clear();
    return x;
  }
  for (auto& [key, c] : x.terms) c *= s;
  return x;
}

TensorRackElt tr_sub(TensorRackElt x, const TensorRackElt& y) {
  for (const auto& [key, c] : y.terms) {
    const Rational neg = -c;
    detail::acc(x.terms, key, neg);
  }
  return x;
}

std::string tr_str(const Uar& a, const TensorRackElt& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : x.terms) {
    if (!out.empty()) out += " + ";
    out += "(" + rat_str(c) + ")·" +
           a.b.labels[static_cast<std::size_t>(key.first)] + "⊗" +
           word_str(a.q.g.names, key.second);
  }
  return out;
}

void tr_validate(const Uar& a, int filtration_cap, const TensorRackElt& x) {
  const int bsize = static_cast<int>(a.basis.monomials.size());
  for (const auto& [key, c] : x.terms) {
    (void)c;
    const auto& [b, w] = key;
    if (b < 0 || b >= bsize) {
      throw Error(Error::Code::IndexOutOfRange,
                  "tensor element uses coalgebra basis index " +
                      std::to_string(b) + " outside [0, " +
                      std::to_string(bsize) + ")");
    }
    if (!std::is_sorted(w.begin(), w.end())) {
      throw Error(Error::Code::IndexOutOfRange,
                  "tensor element word is not weakly increasing");
    }
    for (const int letter : w) {
      if (letter < 0 || letter >= a.q.g.dim) {
        throw Error(Error::Code::IndexOutOfRange,
                    "tensor element word uses generator " +
                        std::to_string(letter) + " outside [0, " +
                        std::to_string(a.q.g.dim) + ")");
      }
    }
    if (static_cast<int>(w.size()) > filtration_cap) {
      throw Error(Error::Code::CapExceeded,
                  "tensor element word has filtration " +
                      std::to_string(w.size()) + " above the cap " +
                      std::to_string(filtration_cap));
    }
  }
}

Rational tr_counit(const Uar& a, const TensorRackElt& x) {
  (void)a;
  Rational out = 0;
  const std::pair<int, PBWMonomial> unit_key{0, {}};
  const auto it = x.terms.find(unit_key);
  if (it != x.terms.end()) out = it->second;
  return out;
}

UEAElt tr_phi(const Uar& a, const TensorRackElt& x) {
  UEAElt out = uea_zero();
  for (const auto& [key, c] : x.terms) {
    const UEAElt w = uea_term(key.second, 1);
    UEAElt p = uea_product(a.q.g, a.phi[static_cast<std::size_t>(key.first)], w);
    uea_scale(p, c);
    uea_add(out, p);
  }
  return out;
}

TensorRackElt tr_act(const Uar& a, const UEAElt& u, const TensorRackElt& x) {
  TensorRackElt out;
  const UEATensor du = uea_coproduct(u);
  for (const auto& [legs, cu] : du) {
    const UEAElt u1 = uea_term(legs.first, 1);
    const UEAElt u2 = uea_term(legs.second, 1);
    for (const auto& [key, cx] : x.terms) {
      const SymElt<Rational> moved =
          ug_act(a.q, u1, uar_monomial(a, key.first));
      const SparseVec<Rational> bcoords = uar_coords(a, moved);
      const UEAElt adv = hopf_adjoint(a.q.g, u2, uea_term(key.second, 1));
      for (const auto& [bi, cb] : bcoords) {
        for (const auto& [w, cw] : adv.terms) {
          const Rational v = cu * cx * cb * cw;
          detail::acc(out.terms, std::pair<int, PBWMonomial>{bi, w}, v);
        }
      }
    }
  }
  return out;
}

TensorRackElt tensor_rack_product(const Uar& a, int filtration_cap,
                                  const TensorRackElt& x,
                                  const TensorRackElt& y) {
  tr_validate(a, filtration_cap, x);
  tr_validate(a, filtration_cap, y);
  TensorRackElt out;
  for (const auto& [xkey, cx] : x.terms) {
    const SymMonomial& m =
        a.basis.monomials[static_cast<std::size_t>(xkey.first)];
    const UEATensor du = uea_coproduct(uea_term(xkey.second, 1));
    for (const MonomialSplit& split : monomial_splits(m)) {
      const int left = a.basis.index.at(split.left);
      const int right = a.basis.index.at(split.right);
      for (const auto& [legs, cu] : du) {
        const UEAElt act1 =
            uea_product(a.q.g, a.phi[static_cast<std::size_t>(left)],
                        uea_term(legs.first, 1));
        const UEAElt act2 =
            uea_product(a.q.g, a.phi[static_cast<std::size_t>(right)],
                        uea_term(legs.second, 1));
        const Rational weight = cx * split.mult * cu;
        for (const auto& [ykey, cy] : y.terms) {
          const SymElt<Rational> moved =
              ug_act(a.q, act1, uar_monomial(a, ykey.first));
          const SparseVec<Rational> bcoords = uar_coords(a, moved);
          if (bcoords.empty()) continue;
          const UEAElt adv =
              hopf_adjoint(a.q.g, act2, uea_term(ykey.second, 1));
          for (const auto& [bi, cb] : bcoords) {
            for (const auto& [w, cw] : adv.terms) {
              const Rational v = weight * cy * cb * cw;
              detail::acc(out.terms, std::pair<int, PBWMonomial>{bi, w}, v);
            }
          }
        }
      }
    }
  }
  return out;
}

TensorRackTensor tr_coproduct(const Uar& a, const TensorRackElt& x) {
  TensorRackTensor out;
  for (const auto& [key, c] : x.terms) {
    const SymMonomial& m =
        a.basis.monomials[static_cast<std::size_t>(key.first)];
    const UEATensor du = uea_coproduct(uea_term(key.second, 1));
    for (const MonomialSplit& split : monomial_splits(m)) {
      const int left = a.basis.index.at(split.left);
      const int right = a.basis.index.at(split.right);
      for (const auto& [legs, cu] : du) {
        const Rational v = c * split.mult * cu;
        detail::acc(out,
                    std::pair<TensorRackKey, TensorRackKey>{
                        {left, legs.first}, {right, legs.second}},
                    v);
      }
    }
  }
  return out;
}

CheckReport tensor_self_distributivity(
    const Uar& a, int filtration_cap,
    const std::vector<TensorRackElt>& sample) {
  CheckReport report("tensor-rack-self-distributivity");
  for (const TensorRackElt& x : sample) {
    const TensorRackTensor dx = tr_coproduct(a, x);
    for (const TensorRackElt& y : sample) {
      for (const TensorRackElt& z : sample) {
        const TensorRackElt inner = tensor_rack_product(a, filtration_cap, y, z);
        const TensorRackElt lhs = tensor_rack_product(a, filtration_cap, x, inner);
        TensorRackElt rhs;
        for (const auto& [legs, c] : dx) {
          const TensorRackElt x1 = tr_term(legs.first.first, legs.first.second, 1);
          const TensorRackElt x2 =
              tr_term(legs.second.first, legs.second.second, 1);
          const TensorRackElt t1 = tensor_rack_product(a, filtration_cap, x1, y);
          const TensorRackElt t2 = tensor_rack_product(a, filtration_cap, x2, z);
          TensorRackElt p = tensor_rack_product(a, filtration_cap, t1, t2);
          tr_scale(p, c);
          tr_add(rhs, p);
        }
        ++report.instances;
        if (!(lhs == rhs)) {
          report.fail("x = " + tr_str(a, x) + ", y = " + tr_str(a, y) +
                      ", z = " + tr_str(a, z) + ": " + tr_str(a, lhs) +
                      " vs " + tr_str(a, rhs));
        }
      }
    }
  }
  return report;
}

std::vector<Rational> series_f(int order) {
  if (order < 0) {
    throw Error(Error::Code::IndexOutOfRange,
                "series order must be nonnegative");
  }
  // e^s = (1 + s)·F(s) gives F_m = 1/m! - F_{m-1} with F_0 = 1.
  std::vector<Rational> f(static_cast<std::size_t>(order) + 1);
  f[0] = 1;
  for (int m = 1; m <= order; ++m) {
    const Rational inv_fact = Rational(1) / Rational(factorial(m));
    const Rational fm = inv_fact - f[static_cast<std::size_t>(m) - 1];
    f[static_cast<std::size_t>(m)] = fm;
  }
  return f;
}

std::vector<Rational> series_g(int order) {
  if (order < 0) {
    throw Error(Error::Code::IndexOutOfRange,
                "series order must be nonnegative");
  }
  // s·G(s) = e^s - 1 gives G_m = 1/(m+1)!.
  std::vector<Rational> g(static_cast<std::size_t>(order) + 1);
  for (int m = 0; m <= order; ++m) {
    const Rational gm = Rational(1) / Rational(factorial(m + 1));
    g[static_cast<std::size_t>(m)] = gm;
  }
  return g;
}

UEAElt eulerian_series(const LieAlgebra& g, const std::vector<Rational>& coeff,
                       const UEAElt& u) {
  const auto coeff_fn = [&coeff](int m) -> Rational {
    if (m < 0 || m >= static_cast<int>(coeff.size())) return Rational(0);
    return coeff[static_cast<std::size_t>(m)];
  };
  const UEAEndo e1 = [&g](const UEAElt& v) { return eulerian(g, v); };
  return convolution_series(g, coeff_fn, e1, u);
}

CheckReport euler_series_identity(const LieAlgebra& g, int filtration_cap) {
  CheckReport report("euler-series-inverts-shifted-idempotent");
  const std::vector<Rational> f = series_f(filtration_cap);
  const UEAEndo shifted = [&g](const UEAElt& v) {
    UEAElt out = uea_one();
    const Rational c = uea_counit(v);
    uea_scale(out, c);
    const UEAElt e = eulerian(g, v);
    uea_add(out, e);
    return out;
  };
  const UEAEndo fseries = [&g, &f](const UEAElt& v) {
    return eulerian_series(g, f, v);
  };
  for (const PBWMonomial& w : pbw_words(g.dim, filtration_cap)) {
    const UEAElt u = uea_term(w, 1);
    const UEAElt conv = convolve(g, shifted, fseries, u);
    ++report.instances;
    if (!(conv == u)) {
      report.fail("word " + word_str(g.names, w) + ": got " +
                  uea_str(conv, g.names));
    }
  }
  return report;
}

TensorRackElt gamma(const Uar& a, const SymElt<Rational>& s) {
  if (s.dim != a.h.dim) {
    throw Error(Error::Code::DimensionMismatch,
                "element has " + std::to_string(s.dim) +
                    " generators, envelope has " + std::to_string(a.h.dim));
  }
  const std::vector<Rational> f = series_f(a.k);
  TensorRackElt out;
  for (const auto& [m, c] : s.terms) {
    for (const MonomialSplit& split : monomial_splits(m)) {
      int b = -1;
      if (split.left.empty()) {
        b = 0;
      } else if (split.left.size() == 1) {
        b = split.left[0] + 1;
      } else {
        continue;  // (1ε + pr) kills degrees two and above
      }
      const int right = a.basis.index.at(split.right);
      const UEAElt fu = eulerian_series(
          a.q.g, f, a.phi[static_cast<std::size_t>(right)]);
      const Rational weight = c * split.mult;
      for (const auto& [w, cw] : fu.terms) {
        const Rational v = weight * cw;
        detail::acc(out.terms, std::pair<int, PBWMonomial>{b, w}, v);
      }
    }
  }
  return out;
}

TensorRackElt psi_lp(const Uar& a, const SymElt<Rational>& s) {
  if (s.dim != a.h.dim) {
    throw Error(Error::Code::DimensionMismatch,
                "element has " + std::to_string(s.dim) +
                    " generators, envelope has " + std::to_string(a.h.dim));
  }
  const auto unit_it = s.terms.find(SymMonomial{});
  if (unit_it != s.terms.end() && !is_zero(unit_it->second)) {
    throw Error(Error::Code::NotAugmentationIdeal,
                "element has counit " + rat_str(unit_it->second) +
                    "; the primitive comparison map needs counit zero");
  }
  const std::vector<Rational> g = series_g(a.k);
  TensorRackElt out;
  for (const auto& [m, c] : s.terms) {
    for (const MonomialSplit& split : monomial_splits(m)) {
      if (split.left.size() != 1) continue;  // pr keeps degree one only
      const int b = split.left[0] + 1;
      const int right = a.basis.index.at(split.right);
      const UEAElt gu = eulerian_series(
          a.q.g, g, a.phi[static_cast<std::size_t>(right)]);
      const Rational weight = c * split.mult;
      for (const auto& [w, cw] : gu.terms) {
        const Rational v = weight * cw;
        detail::acc(out.terms, std::pair<int, PBWMonomial>{b, w}, v);
      }
    }
  }
  return out;
}

CheckReport gamma_module_map(const Uar& a, int filtration_cap) {
  CheckReport report("comparison-map-intertwines-enveloping-action");
  for (const PBWMonomial& w : pbw_words(a.q.g.dim, filtration_cap)) {
    const UEAElt u = uea_term(w, 1);
    for (std::size_t i = 0; i < a.basis.monomials.size(); ++i) {
      const SymElt<Rational> m = uar_monomial(a, static_cast<int>(i));
      const SymElt<Rational> um = ug_act(a.q, u, m);
      const TensorRackElt lhs = gamma(a, um);
      const TensorRackElt rhs = tr_act(a, u, gamma(a, m));
      ++report.instances;
      if (!(lhs == rhs)) {
        report.fail("word " + word_str(a.q.g.names, w) + " on " +
                    a.b.labels[i] + ": " + tr_str(a, lhs) + " vs " +
                    tr_str(a, rhs));
      }
    }
  }
  return report;
}

CheckReport gamma_augmentation(const Uar& a) {
  CheckReport report("comparison-map-preserves-augmentation");
  for (std::size_t i = 0; i < a.basis.monomials.size(); ++i) {
    const SymElt<Rational> m = uar_monomial(a, static_cast<int>(i));
    const UEAElt lhs = tr_phi(a, gamma(a, m));
    ++report.instances;
    if (!(lhs == a.phi[i])) {
      report.fail(a.b.labels[i] + ": " + uea_str(lhs, a.q.g.names) + " vs " +
                  uea_str(a.phi[i], a.q.g.names));
    }
  }
  return report;
}

CheckReport gamma_rack_morphism(const Uar& a, int filtration_cap) {
  CheckReport report("comparison-map-is-rack-algebra-morphism");
  const std::size_t n = a.basis.monomials.size();
  for (std::size_t i = 0; i < n; ++i) {
    const TensorRackElt gi = gamma(a, uar_monomial(a, static_cast<int>(i)));
    for (std::size_t j = 0; j < n; ++j) {
      const SymElt<Rational> prod = column_elt(a, a.b.mu[i][j]);
      const TensorRackElt lhs = gamma(a, prod);
      const TensorRackElt gj = gamma(a, uar_monomial(a, static_cast<int>(j)));
      const TensorRackElt rhs = tensor_rack_product(a, filtration_cap, gi, gj);
      ++report.instances;
      if (!(lhs == rhs)) {
        report.fail(a.b.labels[i] + " ▷ " + a.b.labels[j] + ": " +
                    tr_str(a, lhs) + " vs " + tr_str(a, rhs));
      }
    }
  }
  return report;
}

CheckReport psi_rack_morphism(const Uar& a, int filtration_cap) {
  CheckReport report("primitive-comparison-map-is-rack-morphism");
  const std::size_t n = a.basis.monomials.size();
  for (std::size_t i = 1; i < n; ++i) {
    const TensorRackElt pi = psi_lp(a, uar_monomial(a, static_cast<int>(i)));
    for (std::size_t j = 1; j < n; ++j) {
      const SymElt<Rational> prod = column_elt(a, a.b.mu[i][j]);
      const TensorRackElt lhs = psi_lp(a, prod);
      const TensorRackElt pj =
          psi_lp(a, uar_monomial(a, static_cast<int>(j)));
      const TensorRackElt rhs = tensor_rack_product(a, filtration_cap, pi, pj);
      ++report.instances;
      if (!(lhs == rhs)) {
        report.fail(a.b.labels[i] + " ▷ " + a.b.labels[j] + ": " +
                    tr_str(a, lhs) + " vs " + tr_str(a, rhs));
      }
    }
  }
  return report;
}

CheckReport primitive_bracket_check(const Uar& a) {
  CheckReport report("primitive-part-matches-hemi-semidirect-bracket");
  const LeibnizAlgebra hemi = hemi_semidirect(a.q);
  const int hd = a.h.dim;
  const int gd = a.q.g.dim;
  // (x, ξ) ↦ x ⊗ 1 + 1 ⊗ (ξ - p(x)), a basis-wise linear embedding of the
  // hemi-semidirect product into the primitives of the tensor carrier.
  const auto embed = [&](const QVec& v) {
    TensorRackElt out;
    for (int i = 0; i < hd; ++i) {
      const Rational& ci = v[static_cast<std::size_t>(i)];
      if (is_zero(ci)) continue;
      detail::acc(out.terms, std::pair<int, PBWMonomial>{i + 1, {}}, ci);
      for (int r = 0; r < gd; ++r) {
        const Rational pc = a.q.proj.at(r, i);
        if (is_zero(pc)) continue;
        const Rational c = -(ci * pc);
        detail::acc(out.terms, std::pair<int, PBWMonomial>{0, {r}}, c);
      }
    }
    for (int r = 0; r < gd; ++r) {
      const Rational& cr = v[static_cast<std::size_t>(hd + r)];
      if (is_zero(cr)) continue;
      detail::acc(out.terms, std::pair<int, PBWMonomial>{0, {r}}, cr);
    }
    return out;
  };
  for (int i = 0; i < hemi.dim; ++i) {
    const TensorRackElt xi = embed(qvec_unit(hemi.dim, i));
    for (int j = 0; j < hemi.dim; ++j) {
      const TensorRackElt xj = embed(qvec_unit(hemi.dim, j));
      const TensorRackElt lhs = tensor_rack_product(a, 2, xi, xj);
      const TensorRackElt rhs = embed(hemi.bracket_basis(i, j));
      ++report.instances;
      if (!(lhs == rhs)) {
        report.fail("[" + hemi.names[static_cast<std::size_t>(i)] + ", " +
                    hemi.names[static_cast<std::size_t>(j)] + "]: " +
                    tr_str(a, lhs) + " vs " + tr_str(a, rhs));
      }
    }
  }
  return report;
}

}  // namespace rackbi
