#include "rackbi/starprod.hpp"

#include <algorithm>
#include <utility>

namespace rackbi {

PolyFun<HPoly> pf_lift(const PolyFun<Rational>& f, std::optional<int> trunc) {
  PolyFun<HPoly> out = pf_zero<HPoly>(f.nvars);
  for (const auto& [e, v] : f.terms)
    out.terms.emplace(e, trunc ? HPoly::with_truncation(v, *trunc) : HPoly(v));
  return out;
}

namespace {

SymMonomial exponents_to_word(const std::vector<int>& e) {
  SymMonomial w;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int r = 0; r < e[i]; ++r) w.push_back(static_cast<int>(i));
  return w;
}

PolyFun<HPoly> pf_truncate_degree(const PolyFun<HPoly>& f, int cap) {
  PolyFun<HPoly> out = pf_zero<HPoly>(f.nvars);
  for (const auto& [e, v] : f.terms) {
    int d = 0;
    for (int x : e) d += x;
    if (d <= cap) out.terms.emplace(e, v);
  }
  return out;
}

SymElt<HPoly> sym_lift(const SymElt<Rational>& a, std::optional<int> trunc) {
  SymElt<HPoly> out = sym_zero<HPoly>(a.dim, a.cap);
  for (const auto& [m, v] : a.terms)
    out.terms.emplace(m, trunc ? HPoly::with_truncation(v, *trunc) : HPoly(v));
  return out;
}

}  // namespace

PolyFun<HPoly> star(const LeibnizAlgebra& h, const PolyFun<HPoly>& f,
                    const PolyFun<HPoly>& g, std::optional<int> hbar_order) {
  if (f.nvars != h.dim || g.nvars != h.dim)
    throw Error(Error::Code::DimensionMismatch,
                "polynomial variables vs algebra dimension");
  PolyFun<HPoly> out = pf_zero<HPoly>(h.dim);
  for (const auto& [e, v] : f.terms) {
    int r = 0;
    Rational multiplicities(1);
    for (int d : e) {
      r += d;
      multiplicities *= Rational(factorial(d));
    }
    const HPoly factor = HPoly::hbar(r, hbar_order);
    if (factor.is_zero()) continue;
    const Rational weight = multiplicities / Rational(factorial(r));
    SymMonomial arrangement = exponents_to_word(e);
    PolyFun<HPoly> sum = pf_zero<HPoly>(h.dim);
    do {
      PolyFun<HPoly> cur = g;
      for (auto it = arrangement.rbegin(); it != arrangement.rend(); ++it)
        cur = adtilde(h, *it, cur);
      pf_add(sum, cur);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    const HPoly scale = factor * v * weight;
    pf_scale(sum, scale);
    pf_add(out, sum);
  }
  return out;
}

PolyFun<HPoly> star(const LeibnizAlgebra& h, const PolyFun<Rational>& f,
                    const PolyFun<Rational>& g, std::optional<int> hbar_order) {
  return star(h, pf_lift(f, hbar_order), pf_lift(g, hbar_order), hbar_order);
}

HSeriesVec formal_rack(const LeibnizAlgebra& h, const QVec& x, const QVec& y,
                       int hbar_order) {
  if (static_cast<int>(x.size()) != h.dim ||
      static_cast<int>(y.size()) != h.dim)
    throw Error(Error::Code::DimensionMismatch,
                "vector length vs algebra dimension");
  if (hbar_order < 0)
    throw Error(Error::Code::IndexOutOfRange, "negative series order");
  const auto vec_zero = [](const QVec& w) {
    for (const auto& c : w)
      if (!is_zero(c)) return false;
    return true;
  };
  HSeriesVec out;
  QVec v = y;
  Rational mfact(1);
  for (int m = 0; m <= hbar_order; ++m) {
    if (m > 0) {
      v = h.bracket(x, v);
      mfact *= Rational(m);
    }
    QVec scaled = v;
    for (auto& c : scaled) c /= mfact;
    out.coeff.push_back(std::move(scaled));
  }
  out.exact = vec_zero(h.bracket(x, v));
  return out;
}

PolyFun<HPoly> pf_exp(const PolyFun<HPoly>& z, int degree_cap) {
  if (!pf_eval_zero(z).is_zero())
    throw Error(Error::Code::NotAugmentationIdeal,
                "exponential requires a vanishing constant term");
  PolyFun<HPoly> out = pf_one<HPoly>(z.nvars);
  PolyFun<HPoly> power = pf_one<HPoly>(z.nvars);
  Rational nfact(1);
  for (int n = 1; n <= degree_cap; ++n) {
    power = pf_truncate_degree(pf_product(power, z), degree_cap);
    if (power.is_zero()) break;
    nfact *= Rational(n);
    const Rational inv = Rational(1) / nfact;
    PolyFun<HPoly> term = power;
    pf_scale(term, inv);
    pf_add(out, term);
  }
  return out;
}

CheckReport exp_compat_check(const LeibnizAlgebra& h, const QVec& x,
                             const QVec& y, int hbar_order, int degree_cap) {
  CheckReport report{"exponential-compatibility"};
  const int order = std::min(hbar_order, degree_cap);
  HSeriesVec series = formal_rack(h, x, y, order);

  const auto linear = [&](const QVec& w) {
    PolyFun<HPoly> out = pf_zero<HPoly>(h.dim);
    for (int i = 0; i < h.dim; ++i) {
      if (is_zero(w[i])) continue;
      std::vector<int> e(h.dim, 0);
      e[i] = 1;
      out.terms.emplace(e, HPoly::with_truncation(w[i], order));
    }
    return out;
  };

  const PolyFun<HPoly> lhs = star(h, pf_exp(linear(x), degree_cap),
                                  pf_exp(linear(y), degree_cap), order);

  PolyFun<HPoly> rack_hat = pf_zero<HPoly>(h.dim);
  for (int m = 0; m <= order; ++m) {
    const HPoly hm = HPoly::hbar(m, order);
    for (int i = 0; i < h.dim; ++i) {
      if (is_zero(series.coeff[m][i])) continue;
      std::vector<int> e(h.dim, 0);
      e[i] = 1;
      detail::pf_acc(rack_hat, e, HPoly(hm * series.coeff[m][i]));
    }
  }
  const PolyFun<HPoly> rhs = pf_exp(rack_hat, degree_cap);

  ++report.instances;
  if (!(lhs == rhs))
    report.fail("difference = " + pf_str(pf_sub(lhs, rhs)));
  return report;
}

SymElt<HPoly> star_on_sym(const LeibnizAlgebra& h, const SymElt<HPoly>& a,
                          const SymElt<HPoly>& b,
                          std::optional<int> hbar_order) {
  if (a.dim != h.dim || b.dim != h.dim)
    throw Error(Error::Code::DimensionMismatch,
                "element dimension vs algebra dimension");
  SymElt<HPoly> out = sym_zero<HPoly>(b.dim, b.cap);
  for (const auto& [m, c] : a.terms) {
    const HPoly factor =
        HPoly::hbar(static_cast<int>(m.size()), hbar_order);
    if (factor.is_zero()) continue;
    SymElt<HPoly> chain = adjoint_chain(h, m, b);
    const HPoly scale = factor * c;
    sym_scale(chain, scale);
    sym_add(out, chain);
  }
  return out;
}

SymElt<HPoly> star_on_sym(const LeibnizAlgebra& h, const SymElt<Rational>& a,
                          const SymElt<Rational>& b,
                          std::optional<int> hbar_order) {
  return star_on_sym(h, sym_lift(a, hbar_order), sym_lift(b, hbar_order),
                     hbar_order);
}

Bialg<HPoly> deformed_bialg(const Uar& a, std::optional<int> trunc) {
  Bialg<HPoly> out = to_hpoly(a.b, trunc);
  for (int i = 0; i < out.dim; ++i) {
    const int deg = static_cast<int>(a.basis.monomials.at(i).size());
    const HPoly factor = HPoly::hbar(deg, trunc);
    for (int j = 0; j < out.dim; ++j) {
      SparseVec<HPoly> scaled;
      for (const auto& [t, c] : out.mu[i][j])
        detail::acc(scaled, t, HPoly(factor * c));
      out.mu[i][j] = std::move(scaled);
    }
  }
  return out;
}

LeibnizAlgebra transport_structure(const LeibnizAlgebra& h,
                                   const ExactMatrix& p) {
  if (p.rows() != h.dim || p.cols() != h.dim)
    throw Error(Error::Code::DimensionMismatch, "basis-change matrix shape");
  const std::optional<ExactMatrix> pinv = inverse(p);
  if (!pinv)
    throw Error(Error::Code::DimensionMismatch,
                "basis-change matrix is singular");
  const int n = h.dim;
  std::vector<Rational> c(static_cast<std::size_t>(n) * n * n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QVec img(n, Rational(0));
      for (int a = 0; a < n; ++a) {
        if (is_zero(p.at(a, i))) continue;
        for (int b = 0; b < n; ++b) {
          if (is_zero(p.at(b, j))) continue;
          const Rational pp = p.at(a, i) * p.at(b, j);
          for (int k = 0; k < n; ++k) img[k] += pp * h.structure(a, b, k);
        }
      }
      for (int k = 0; k < n; ++k) {
        Rational v(0);
        for (int t = 0; t < n; ++t) v += pinv->at(k, t) * img[t];
        c[(static_cast<std::size_t>(i) * n + j) * n + k] = v;
      }
    }
  return make_leibniz(n, {}, std::move(c));
}

}  // namespace rackbi
