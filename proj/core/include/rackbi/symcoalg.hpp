#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rackbi/error.hpp"
#include "rackbi/hpoly.hpp"
#include "rackbi/matrix.hpp"
#include "rackbi/rational.hpp"

namespace rackbi {

/// Commutative monomial over generators x_1..x_dim, stored as a weakly
/// increasing list of 0-based generator indices; the empty list is the unit.
using SymMonomial = std::vector<int>;

int monomial_degree(const SymMonomial& m);
std::string monomial_str(const SymMonomial& m,
                         const std::vector<std::string>& names);

/// All monomials of degree <= cap in degree-lexicographic order (degree
/// first, then lexicographic on the index lists). Position 0 is the unit.
struct SymBasis {
  int dim = 0;
  int cap = 0;
  std::vector<SymMonomial> monomials;
  std::map<SymMonomial, int> index;
};

SymBasis sym_basis(int dim, int cap);

/// One summand of a two-block multiset splitting, with its multiplicity
/// (the product of binomial coefficients per repeated generator).
struct MonomialSplit {
  SymMonomial left;
  SymMonomial right;
  Rational mult;
};

/// Every way of splitting m into an ordered pair of sub-multisets; this is
/// exactly the coproduct of the symmetric coalgebra on a monomial.
std::vector<MonomialSplit> monomial_splits(const SymMonomial& m);

/// Element of the (truncated) symmetric coalgebra S(V) on dim generators
/// with coefficients in K. degree_cap, when set, makes the element live in
/// the finite-dimensional quotient coalgebra of degrees <= cap: products
/// drop overflowing terms, and binary operations keep the smaller cap.
template <class K>
struct SymElt {
  int dim = 0;
  std::optional<int> cap;
  std::map<SymMonomial, K> terms;

  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const SymElt& a, const SymElt& b) {
    return a.dim == b.dim && a.terms == b.terms;
  }
};

namespace detail {

inline std::optional<int> min_cap(const std::optional<int>& a,
                                  const std::optional<int>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

template <class K>
void sym_acc(SymElt<K>& e, const SymMonomial& m, const K& v) {
  if (is_zero(v)) return;
  if (e.cap && monomial_degree(m) > *e.cap) return;
  auto it = e.terms.find(m);
  if (it == e.terms.end()) {
    e.terms.emplace(m, v);
    return;
  }
  it->second += v;
  if (is_zero(it->second)) e.terms.erase(it);
}

inline void check_monomial(int dim, const SymMonomial& m) {
  for (std::size_t t = 0; t < m.size(); ++t) {
    if (m[t] < 0 || m[t] >= dim)
      throw Error(Error::Code::IndexOutOfRange, "monomial generator index");
    if (t > 0 && m[t] < m[t - 1])
      throw Error(Error::Code::ParseError, "monomial indices not sorted");
  }
}

}  // namespace detail

template <class K>
SymElt<K> sym_zero(int dim, std::optional<int> cap = std::nullopt) {
  SymElt<K> e;
  e.dim = dim;
  e.cap = cap;
  return e;
}

template <class K>
SymElt<K> sym_term(int dim, const SymMonomial& m, const K& coeff,
                   std::optional<int> cap = std::nullopt) {
  detail::check_monomial(dim, m);
  SymElt<K> e = sym_zero<K>(dim, cap);
  detail::sym_acc(e, m, coeff);
  return e;
}

template <class K>
SymElt<K> sym_unit(int dim, std::optional<int> cap = std::nullopt) {
  return sym_term<K>(dim, {}, K(1), cap);
}

template <class K>
SymElt<K> sym_gen(int dim, int i, std::optional<int> cap = std::nullopt) {
  return sym_term<K>(dim, {i}, K(1), cap);
}

template <class K>
SymElt<K>& sym_add(SymElt<K>& a, const SymElt<K>& b) {
  if (a.dim != b.dim)
    throw Error(Error::Code::DimensionMismatch, "symmetric element dims");
  a.cap = detail::min_cap(a.cap, b.cap);
  if (a.cap) {
    // Re-clamp existing terms to the tightened cap.
    for (auto it = a.terms.begin(); it != a.terms.end();)
      it = monomial_degree(it->first) > *a.cap ? a.terms.erase(it)
                                               : std::next(it);
  }
  for (const auto& [m, v] : b.terms) detail::sym_acc(a, m, v);
  return a;
}

template <class K, class S>
SymElt<K>& sym_scale(SymElt<K>& a, const S& s) {
  if (is_zero(s)) {
    a.terms.clear();
    return a;
  }
  for (auto& [m, v] : a.terms) v = v * s;
  for (auto it = a.terms.begin(); it != a.terms.end();)
    it = is_zero(it->second) ? a.terms.erase(it) : std::next(it);
  return a;
}

template <class K>
SymElt<K> sym_sub(SymElt<K> a, SymElt<K> b) {
  sym_scale(b, Rational(-1));
  return sym_add(a, b);
}

template <class K>
SymElt<K> sym_product(const SymElt<K>& a, const SymElt<K>& b) {
  if (a.dim != b.dim)
    throw Error(Error::Code::DimensionMismatch, "symmetric element dims");
  SymElt<K> out = sym_zero<K>(a.dim, detail::min_cap(a.cap, b.cap));
  for (const auto& [ma, va] : a.terms) {
    for (const auto& [mb, vb] : b.terms) {
      SymMonomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(),
                 std::back_inserter(m));
      detail::sym_acc(out, m, K(va * vb));
    }
  }
  return out;
}

template <class K>
using SymTensor = std::map<std::pair<SymMonomial, SymMonomial>, K>;

/// Coproduct: every splitting of every monomial with its multiplicity, e.g.
/// x.x maps to x^2 (x) 1 + 2 x (x) x + 1 (x) x^2.
template <class K>
SymTensor<K> coproduct(const SymElt<K>& a) {
  SymTensor<K> out;
  for (const auto& [m, v] : a.terms) {
    for (const auto& split : monomial_splits(m)) {
      K add = v * split.mult;
      auto key = std::make_pair(split.left, split.right);
      auto it = out.find(key);
      if (it == out.end()) {
        if (!is_zero(add)) out.emplace(std::move(key), std::move(add));
      } else {
        it->second += add;
        if (is_zero(it->second)) out.erase(it);
      }
    }
  }
  return out;
}

template <class K>
K counit(const SymElt<K>& a) {
  auto it = a.terms.find(SymMonomial{});
  return it == a.terms.end() ? K(0) : it->second;
}

/// Functorial extension S(f) of a linear map given by a matrix
/// (rows: target generators, cols: source generators): multiplicative,
/// sends each generator x_i to sum_j f_ji y_j.
template <class K>
SymElt<K> sym_map(const ExactMatrix& f, const SymElt<K>& a,
                  std::optional<int> target_cap = std::nullopt) {
  if (f.cols() != a.dim)
    throw Error(Error::Code::DimensionMismatch, "map/source dims");
  std::optional<int> cap = detail::min_cap(a.cap, target_cap);
  SymElt<K> out = sym_zero<K>(f.rows(), cap);
  for (const auto& [m, v] : a.terms) {
    SymElt<K> img = sym_unit<K>(f.rows(), cap);
    sym_scale(img, v);
    for (int idx : m) {
      SymElt<K> gen_img = sym_zero<K>(f.rows(), cap);
      for (int r = 0; r < f.rows(); ++r)
        if (!is_zero(f.at(r, idx)))
          detail::sym_acc(gen_img, SymMonomial{r}, K(f.at(r, idx)));
      img = sym_product(img, gen_img);
    }
    sym_add(out, img);
  }
  return out;
}

template <class K>
std::vector<K> sym_coords(const SymElt<K>& a, const SymBasis& basis) {
  if (a.dim != basis.dim)
    throw Error(Error::Code::DimensionMismatch, "element/basis dims");
  std::vector<K> out(basis.monomials.size(), K(0));
  for (const auto& [m, v] : a.terms) {
    auto it = basis.index.find(m);
    if (it == basis.index.end())
      throw Error(Error::Code::CapExceeded,
                  "monomial degree exceeds the basis cap");
    out[it->second] = v;
  }
  return out;
}

template <class K>
std::string sym_str(const SymElt<K>& a, const std::vector<std::string>& names);

std::string coeff_str(const Rational& v);
std::string coeff_str(const HPoly& v);

template <class K>
std::string sym_str(const SymElt<K>& a,
                    const std::vector<std::string>& names) {
  if (a.terms.empty()) return "0";
  std::string out;
  for (const auto& [m, v] : a.terms) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff_str(v) + ")" +
           (m.empty() ? "" : "·" + monomial_str(m, names));
  }
  return out;
}

}  // namespace rackbi
