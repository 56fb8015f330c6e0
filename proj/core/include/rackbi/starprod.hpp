#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rackbi/error.hpp"
#include "rackbi/hpoly.hpp"
#include "rackbi/leibniz.hpp"
#include "rackbi/matrix.hpp"
#include "rackbi/rational.hpp"
#include "rackbi/symcoalg.hpp"
#include "rackbi/uar.hpp"

namespace rackbi {

/// Polynomial function on the dual space of an algebra with nvars basis
/// coordinates a_1..a_n: finitely many terms, keyed by exponent vectors of
/// length nvars, with no zero coefficients stored.
template <class K>
struct PolyFun {
  int nvars = 0;
  std::map<std::vector<int>, K> terms;

  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const PolyFun& a, const PolyFun& b) {
    return a.nvars == b.nvars && a.terms == b.terms;
  }
};

namespace detail {

inline void check_exponents(int nvars, const std::vector<int>& e) {
  if (static_cast<int>(e.size()) != nvars)
    throw Error(Error::Code::DimensionMismatch, "exponent vector length");
  for (int d : e)
    if (d < 0) throw Error(Error::Code::ParseError, "negative exponent");
}

template <class K>
void pf_acc(PolyFun<K>& f, const std::vector<int>& e, const K& v) {
  if (is_zero(v)) return;
  auto it = f.terms.find(e);
  if (it == f.terms.end()) {
    f.terms.emplace(e, v);
    return;
  }
  it->second += v;
  if (is_zero(it->second)) f.terms.erase(it);
}

}  // namespace detail

template <class K>
PolyFun<K> pf_zero(int nvars) {
  PolyFun<K> f;
  f.nvars = nvars;
  return f;
}

template <class K>
PolyFun<K> pf_term(int nvars, const std::vector<int>& exponents,
                   const K& coeff) {
  detail::check_exponents(nvars, exponents);
  PolyFun<K> f = pf_zero<K>(nvars);
  detail::pf_acc(f, exponents, coeff);
  return f;
}

template <class K>
PolyFun<K> pf_one(int nvars) {
  return pf_term<K>(nvars, std::vector<int>(nvars, 0), K(1));
}

/// The coordinate function a_{i+1} (0-based index).
template <class K>
PolyFun<K> pf_coord(int nvars, int i) {
  if (i < 0 || i >= nvars)
    throw Error(Error::Code::IndexOutOfRange, "coordinate index");
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  return pf_term<K>(nvars, e, K(1));
}

template <class K>
PolyFun<K>& pf_add(PolyFun<K>& a, const PolyFun<K>& b) {
  if (a.nvars != b.nvars)
    throw Error(Error::Code::DimensionMismatch, "polynomial variable counts");
  for (const auto& [e, v] : b.terms) detail::pf_acc(a, e, v);
  return a;
}

template <class K, class S>
PolyFun<K>& pf_scale(PolyFun<K>& a, const S& s) {
  if (is_zero(s)) {
    a.terms.clear();
    return a;
  }
  for (auto& [e, v] : a.terms) v = v * s;
  for (auto it = a.terms.begin(); it != a.terms.end();)
    it = is_zero(it->second) ? a.terms.erase(it) : std::next(it);
  return a;
}

template <class K>
PolyFun<K> pf_sub(PolyFun<K> a, const PolyFun<K>& b) {
  PolyFun<K> nb = b;
  pf_scale(nb, Rational(-1));
  return pf_add(a, nb);
}

template <class K>
PolyFun<K> pf_product(const PolyFun<K>& a, const PolyFun<K>& b) {
  if (a.nvars != b.nvars)
    throw Error(Error::Code::DimensionMismatch, "polynomial variable counts");
  PolyFun<K> out = pf_zero<K>(a.nvars);
  for (const auto& [ea, va] : a.terms)
    for (const auto& [eb, vb] : b.terms) {
      std::vector<int> e(a.nvars);
      for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      detail::pf_acc(out, e, K(va * vb));
    }
  return out;
}

/// Total degree of the highest term, -1 for the zero polynomial.
template <class K>
int pf_degree(const PolyFun<K>& f) {
  int deg = -1;
  for (const auto& [e, v] : f.terms) {
    int d = 0;
    for (int x : e) d += x;
    deg = std::max(deg, d);
  }
  return deg;
}

template <class K>
PolyFun<K> pf_partial(const PolyFun<K>& f, int j) {
  if (j < 0 || j >= f.nvars)
    throw Error(Error::Code::IndexOutOfRange, "derivative index");
  PolyFun<K> out = pf_zero<K>(f.nvars);
  for (const auto& [e, v] : f.terms) {
    if (e[j] == 0) continue;
    std::vector<int> d = e;
    d[j] -= 1;
    detail::pf_acc(out, d, K(v * Rational(e[j])));
  }
  return out;
}

/// Value at the origin (the constant term).
template <class K>
K pf_eval_zero(const PolyFun<K>& f) {
  auto it = f.terms.find(std::vector<int>(f.nvars, 0));
  return it == f.terms.end() ? K(0) : it->second;
}

/// Substitutes each variable by a linear form: a_i goes to the form whose
/// coefficients are column i of the matrix (rows index the new variables),
/// matching the matrix of a linear map between the underlying spaces.
template <class K>
PolyFun<K> pf_substitute(const PolyFun<K>& f, const ExactMatrix& map) {
  if (map.cols() != f.nvars)
    throw Error(Error::Code::DimensionMismatch, "substitution shape");
  const int out_vars = map.rows();
  PolyFun<K> out = pf_zero<K>(out_vars);
  for (const auto& [e, v] : f.terms) {
    PolyFun<K> img = pf_one<K>(out_vars);
    pf_scale(img, v);
    for (int i = 0; i < f.nvars; ++i)
      for (int rep = 0; rep < e[i]; ++rep) {
        PolyFun<K> form = pf_zero<K>(out_vars);
        for (int r = 0; r < out_vars; ++r)
          if (!rackbi::is_zero(map.at(r, i))) {
            std::vector<int> unit(out_vars, 0);
            unit[r] = 1;
            detail::pf_acc(form, unit, K(map.at(r, i)));
          }
        img = pf_product(img, form);
      }
    pf_add(out, img);
  }
  return out;
}

PolyFun<HPoly> pf_lift(const PolyFun<Rational>& f,
                       std::optional<int> trunc = std::nullopt);

template <class K>
std::string pf_str(const PolyFun<K>& f) {
  if (f.terms.empty()) return "0";
  std::string out;
  for (const auto& [e, v] : f.terms) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff_str(v) + ")";
    for (int i = 0; i < f.nvars; ++i) {
      if (e[i] == 0) continue;
      out += "·a" + std::to_string(i + 1);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

/// First-order differential operator dual to the left multiplication by the
/// i-th basis element: replaces d/da_j by the linear form whose a_k
/// coefficient is the structure constant of e_k in [e_i, e_j].
template <class K>
PolyFun<K> adtilde(const LeibnizAlgebra& h, int i, const PolyFun<K>& f) {
  if (i < 0 || i >= h.dim)
    throw Error(Error::Code::IndexOutOfRange, "basis index");
  if (f.nvars != h.dim)
    throw Error(Error::Code::DimensionMismatch, "variables vs algebra dim");
  PolyFun<K> out = pf_zero<K>(h.dim);
  for (int j = 0; j < h.dim; ++j) {
    PolyFun<K> df = pf_partial(f, j);
    if (df.is_zero()) continue;
    PolyFun<K> form = pf_zero<K>(h.dim);
    for (int k = 0; k < h.dim; ++k)
      if (!rackbi::is_zero(h.structure(i, j, k))) {
        std::vector<int> unit(h.dim, 0);
        unit[k] = 1;
        detail::pf_acc(form, unit, K(h.structure(i, j, k)));
      }
    pf_add(out, pf_product(form, df));
  }
  return out;
}

/// Multiplicative identification of symmetric tensors with polynomial
/// functions on the dual: each generator becomes its coordinate function,
/// monomials become products. Injective (monomials map to distinct terms).
template <class K>
PolyFun<K> psi(const SymElt<K>& a) {
  PolyFun<K> out = pf_zero<K>(a.dim);
  for (const auto& [m, v] : a.terms) {
    std::vector<int> e(a.dim, 0);
    for (int i : m) e[i] += 1;
    detail::pf_acc(out, e, v);
  }
  return out;
}

/// Deformed product on polynomial functions: each degree-r term of f, with
/// its Taylor coefficient at the origin, contributes h^r times the average
/// over all orderings of the composed adtilde operators applied to g.
/// The h-constant term is f(0) g.
PolyFun<HPoly> star(const LeibnizAlgebra& h, const PolyFun<HPoly>& f,
                    const PolyFun<HPoly>& g,
                    std::optional<int> hbar_order = std::nullopt);
PolyFun<HPoly> star(const LeibnizAlgebra& h, const PolyFun<Rational>& f,
                    const PolyFun<Rational>& g,
                    std::optional<int> hbar_order = std::nullopt);

/// Generalized (not necessarily skew) bracket: minus the sum over i of the
/// first-order Taylor coefficients of f times adtilde_i(g). The h-linear
/// coefficient of star(f, g) is exactly minus this bracket.
template <class K>
PolyFun<K> poisson(const LeibnizAlgebra& h, const PolyFun<K>& f,
                   const PolyFun<K>& g) {
  if (f.nvars != h.dim || g.nvars != h.dim)
    throw Error(Error::Code::DimensionMismatch, "variables vs algebra dim");
  PolyFun<K> out = pf_zero<K>(h.dim);
  for (int i = 0; i < h.dim; ++i) {
    K c = pf_eval_zero(pf_partial(f, i));
    if (is_zero(c)) continue;
    PolyFun<K> term = adtilde(h, i, g);
    pf_scale(term, K(c * Rational(-1)));
    pf_add(out, term);
  }
  return out;
}

/// Formal one-parameter rack product of two algebra elements: the m-th
/// coefficient is ad_x^m(y)/m!, computed up to the requested order. exact
/// is set when the iterated bracket vanished within the bound, so the
/// series is the whole (polynomial) answer rather than a truncation.
struct HSeriesVec {
  std::vector<QVec> coeff;
  bool exact = false;
};

HSeriesVec formal_rack(const LeibnizAlgebra& h, const QVec& x, const QVec& y,
                       int hbar_order);

/// Exponential-compatibility check: the deformed product of two truncated
/// exponential functions against the exponential of the formal rack
/// product, both expanded to polynomial degree <= degree_cap with
/// h-coefficients truncated at min(hbar_order, degree_cap) — the order to
/// which the degree-capped expansion is faithful.
CheckReport exp_compat_check(const LeibnizAlgebra& h, const QVec& x,
                             const QVec& y, int hbar_order, int degree_cap);

/// Degree-capped Taylor exponential of a polynomial with no constant term
/// (Error{NotAugmentationIdeal} otherwise).
PolyFun<HPoly> pf_exp(const PolyFun<HPoly>& z, int degree_cap);

/// The same deformation transported to the symmetric coalgebra: the
/// degree-r component of a acts through the iterated-bracket product,
/// weighted by h^r.
SymElt<HPoly> star_on_sym(const LeibnizAlgebra& h, const SymElt<HPoly>& a,
                          const SymElt<HPoly>& b,
                          std::optional<int> hbar_order = std::nullopt);
SymElt<HPoly> star_on_sym(const LeibnizAlgebra& h, const SymElt<Rational>& a,
                          const SymElt<Rational>& b,
                          std::optional<int> hbar_order = std::nullopt);

/// The h-graded product tables of the universal envelope rack: the entry
/// for a degree-r left factor is h^r times the stored table entry, making
/// the bialgebra a one-parameter deformation of the trivial product.
Bialg<HPoly> deformed_bialg(const Uar& a,
                            std::optional<int> trunc = std::nullopt);

/// Structure constants transported along an invertible linear map given by
/// its matrix (column i holds the image of basis vector i): the unique
/// algebra making that map an isomorphism. Throws Error{DimensionMismatch}
/// when the matrix is not square of the algebra's dimension or is singular.
LeibnizAlgebra transport_structure(const LeibnizAlgebra& h,
                                   const ExactMatrix& p);

}  // namespace rackbi
