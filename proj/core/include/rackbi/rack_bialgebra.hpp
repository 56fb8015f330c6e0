#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rackbi/error.hpp"
#include "rackbi/hpoly.hpp"
#include "rackbi/matrix.hpp"
#include "rackbi/rational.hpp"
#include "rackbi/symcoalg.hpp"

namespace rackbi {

/// Outcome of one verification pass: the axiom checked, whether every
/// instance held, how many instances were evaluated, and the first
/// counterexample encountered (empty when pass).
struct CheckReport {
  std::string name;
  bool pass = true;
  long long instances = 0;
  std::string counterexample;

  CheckReport() = default;
  explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

  /// Records the first failure only; later ones are counted but not stored.
  void fail(const std::string& witness);
};

bool all_pass(const std::vector<CheckReport>& reports);

/// Sparse element, 2-tensor and 3-tensor in basis coordinates.
template <class K>
using SparseVec = std::map<int, K>;
template <class K>
using SparseTen2 = std::map<std::pair<int, int>, K>;
template <class K>
using SparseTen3 = std::map<std::tuple<int, int, int>, K>;

namespace detail {

template <class Key, class K>
void acc(std::map<Key, K>& m, const Key& key, const K& v) {
  if (is_zero(v)) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, v);
    return;
  }
  it->second += v;
  if (is_zero(it->second)) m.erase(it);
}

}  // namespace detail

/// Finite-dimensional coaugmented coalgebra with an optional product table,
/// all in coordinates over a fixed basis: delta[i] is the coproduct of basis
/// element i, eps the counit row, one the distinguished group-like unit, and
/// mu[i][j] the product of basis elements i and j. No axiom is assumed to
/// hold; verify_coalgebra and verify_rack_axioms check them. A value whose
/// mu table is empty is a bare coalgebra (accepted by trivial_product).
template <class K>
struct Bialg {
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<SparseTen2<K>> delta;
  std::vector<K> eps;
  SparseVec<K> one;
  std::vector<std::vector<SparseVec<K>>> mu;
};

template <class K>
SparseVec<K> basis_elt(int i) {
  SparseVec<K> v;
  v.emplace(i, K(1));
  return v;
}

/// Throws Error{MalformedCoalgebra} when table sizes or index ranges are
/// inconsistent with dim (and, when with_product, when mu is not dim x dim).
template <class K>
void check_tables(const Bialg<K>& B, bool with_product) {
  const auto bad = [](const std::string& what) {
    throw Error(Error::Code::MalformedCoalgebra, what);
  };
  if (B.dim <= 0) bad("coalgebra dimension must be positive");
  if (static_cast<int>(B.delta.size()) != B.dim ||
      static_cast<int>(B.eps.size()) != B.dim ||
      static_cast<int>(B.labels.size()) != B.dim)
    bad("coalgebra table sizes do not match dim");
  const auto in_range = [&](int t) { return 0 <= t && t < B.dim; };
  for (const auto& row : B.delta)
    for (const auto& [pq, c] : row) {
      (void)c;
      if (!in_range(pq.first) || !in_range(pq.second))
        bad("coproduct index out of range");
    }
  for (const auto& [t, c] : B.one) {
    (void)c;
    if (!in_range(t)) bad("unit index out of range");
  }
  if (!with_product) return;
  if (static_cast<int>(B.mu.size()) != B.dim)
    bad("product table is not dim x dim");
  for (const auto& row : B.mu) {
    if (static_cast<int>(row.size()) != B.dim)
      bad("product table is not dim x dim");
    for (const auto& entry : row)
      for (const auto& [t, c] : entry) {
        (void)c;
        if (!in_range(t)) bad("product index out of range");
      }
  }
}

template <class K>
SparseVec<K> bialg_product(const Bialg<K>& B, const SparseVec<K>& a,
                           const SparseVec<K>& b) {
  SparseVec<K> out;
  for (const auto& [i, va] : a)
    for (const auto& [j, vb] : b) {
      const K c = va * vb;
      if (is_zero(c)) continue;
      for (const auto& [t, m] : B.mu.at(i).at(j))
        detail::acc(out, t, K(c * m));
    }
  return out;
}

template <class K>
SparseTen2<K> bialg_coproduct(const Bialg<K>& B, const SparseVec<K>& a) {
  SparseTen2<K> out;
  for (const auto& [i, v] : a)
    for (const auto& [pq, c] : B.delta.at(i)) detail::acc(out, pq, K(v * c));
  return out;
}

template <class K>
K bialg_counit(const Bialg<K>& B, const SparseVec<K>& a) {
  K out(0);
  for (const auto& [i, v] : a) out += v * B.eps.at(i);
  return out;
}

template <class K>
std::string el_str(const Bialg<K>& B, const SparseVec<K>& a) {
  if (a.empty()) return "0";
  std::string out;
  for (const auto& [i, v] : a) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff_str(v) + ")·" + B.labels.at(i);
  }
  return out;
}

template <class K>
std::string ten2_str(const Bialg<K>& B, const SparseTen2<K>& t) {
  if (t.empty()) return "0";
  std::string out;
  for (const auto& [pq, v] : t) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff_str(v) + ")·" + B.labels.at(pq.first) + "⊗" +
           B.labels.at(pq.second);
  }
  return out;
}

template <class K>
bool is_cocommutative(const Bialg<K>& B) {
  for (const auto& row : B.delta) {
    SparseTen2<K> swapped;
    for (const auto& [pq, c] : row)
      swapped.emplace(std::make_pair(pq.second, pq.first), c);
    if (swapped != row) return false;
  }
  return true;
}

/// Coassociativity, the two counit laws, and group-likeness of the unit,
/// each checked on every basis element. Throws Error{MalformedCoalgebra}
/// only for shape problems; law failures are reported, not thrown.
template <class K>
std::vector<CheckReport> verify_coalgebra(const Bialg<K>& B) {
  check_tables(B, false);
  std::vector<CheckReport> out;

  CheckReport coassoc{"coassociativity"};
  for (int i = 0; i < B.dim; ++i) {
    SparseTen3<K> left, right;
    for (const auto& [pq, c] : B.delta[i]) {
      for (const auto& [rs, d] : B.delta[pq.first])
        detail::acc(left, std::make_tuple(rs.first, rs.second, pq.second),
                    K(c * d));
      for (const auto& [rs, d] : B.delta[pq.second])
        detail::acc(right, std::make_tuple(pq.first, rs.first, rs.second),
                    K(c * d));
    }
    ++coassoc.instances;
    if (left != right) coassoc.fail(B.labels[i]);
  }
  out.push_back(std::move(coassoc));

  CheckReport counits{"counit-laws"};
  for (int i = 0; i < B.dim; ++i) {
    SparseVec<K> left, right;
    for (const auto& [pq, c] : B.delta[i]) {
      detail::acc(left, pq.second, K(c * B.eps[pq.first]));
      detail::acc(right, pq.first, K(c * B.eps[pq.second]));
    }
    ++counits.instances;
    if (left != basis_elt<K>(i) || right != basis_elt<K>(i))
      counits.fail(B.labels[i]);
  }
  out.push_back(std::move(counits));

  CheckReport unit{"unit-grouplike"};
  unit.instances = 1;
  SparseTen2<K> one_sq;
  for (const auto& [p, c] : B.one)
    for (const auto& [q, d] : B.one)
      detail::acc(one_sq, std::make_pair(p, q), K(c * d));
  if (bialg_coproduct(B, B.one) != one_sq || bialg_counit(B, B.one) != K(1))
    unit.fail("unit is not group-like of counit one");
  out.push_back(std::move(unit));
  return out;
}

/// Throws Error{MalformedCoalgebra} unless the coalgebra tables are
/// well-shaped and satisfy the coalgebra laws.
template <class K>
void require_coalgebra(const Bialg<K>& B, bool with_product) {
  check_tables(B, with_product);
  for (const auto& report : verify_coalgebra(B))
    if (!report.pass)
      throw Error(Error::Code::MalformedCoalgebra,
                  report.name + " fails at " + report.counterexample);
}

/// The rack-bialgebra axioms, checked exhaustively on basis tuples:
/// the product is a coalgebra morphism, the unit is left-neutral and
/// right-absorbing, and the product is self-distributive through the
/// coproduct: a>(b>c) = sum (a1>b)>(a2>c).
template <class K>
std::vector<CheckReport> verify_rack_axioms(const Bialg<K>& B) {
  require_coalgebra(B, true);
  std::vector<CheckReport> out;

  std::vector<std::vector<SparseVec<K>>> const& mu = B.mu;

  CheckReport morph{"product-coalgebra-morphism"};
  for (int i = 0; i < B.dim; ++i)
    for (int j = 0; j < B.dim; ++j) {
      SparseTen2<K> lhs = bialg_coproduct(B, mu[i][j]);
      SparseTen2<K> rhs;
      for (const auto& [pq, c] : B.delta[i])
        for (const auto& [rs, d] : B.delta[j]) {
          const K cd = c * d;
          for (const auto& [t1, m1] : mu[pq.first][rs.first])
            for (const auto& [t2, m2] : mu[pq.second][rs.second])
              detail::acc(rhs, std::make_pair(t1, t2), K(cd * m1 * m2));
        }
      ++morph.instances;
      if (lhs != rhs)
        morph.fail("(" + B.labels[i] + ", " + B.labels[j] +
                   "): lhs = " + ten2_str(B, lhs) +
                   ", rhs = " + ten2_str(B, rhs));
      K eps_prod = bialg_counit(B, mu[i][j]);
      if (eps_prod != K(B.eps[i] * B.eps[j]))
        morph.fail("(" + B.labels[i] + ", " + B.labels[j] +
                   "): counit of product differs");
    }
  out.push_back(std::move(morph));

  CheckReport lneutral{"unit-left-neutral"};
  for (int j = 0; j < B.dim; ++j) {
    ++lneutral.instances;
    if (bialg_product(B, B.one, basis_elt<K>(j)) != basis_elt<K>(j))
      lneutral.fail(B.labels[j]);
  }
  out.push_back(std::move(lneutral));

  CheckReport rabsorb{"unit-right-absorbing"};
  for (int i = 0; i < B.dim; ++i) {
    SparseVec<K> expect;
    for (const auto& [t, c] : B.one) detail::acc(expect, t, K(B.eps[i] * c));
    ++rabsorb.instances;
    if (bialg_product(B, basis_elt<K>(i), B.one) != expect)
      rabsorb.fail(B.labels[i]);
  }
  out.push_back(std::move(rabsorb));

  CheckReport sd{"self-distributivity"};
  for (int i = 0; i < B.dim; ++i)
    for (int j = 0; j < B.dim; ++j)
      for (int k = 0; k < B.dim; ++k) {
        SparseVec<K> lhs;
        for (const auto& [t, c] : mu[j][k])
          for (const auto& [s, d] : mu[i].at(t)) detail::acc(lhs, s, K(c * d));
        SparseVec<K> rhs;
        for (const auto& [pq, c] : B.delta[i]) {
          for (const auto& [t, d] : mu[pq.first][j]) {
            const K cd = c * d;
            for (const auto& [u, e] : mu[pq.second][k]) {
              if (is_zero(e)) continue;
              for (const auto& [s, m] : mu.at(t).at(u))
                detail::acc(rhs, s, K(cd * e * m));
            }
          }
        }
        ++sd.instances;
        if (lhs != rhs)
          sd.fail("(" + B.labels[i] + ", " + B.labels[j] + ", " +
                  B.labels[k] + "): lhs = " + el_str(B, lhs) +
                  ", rhs = " + el_str(B, rhs));
      }
  out.push_back(std::move(sd));
  return out;
}

/// The product a > b = eps(a) b on any valid coalgebra (mu is rebuilt,
/// any existing product table is ignored).
template <class K>
Bialg<K> trivial_product(Bialg<K> C) {
  require_coalgebra(C, false);
  C.mu.assign(C.dim, std::vector<SparseVec<K>>(C.dim));
  for (int i = 0; i < C.dim; ++i)
    for (int j = 0; j < C.dim; ++j)
      if (!is_zero(C.eps[i])) C.mu[i][j].emplace(j, C.eps[i]);
  return C;
}

template <class K>
SparseVec<K> el_map(const ExactMatrix& f, const SparseVec<K>& a) {
  SparseVec<K> out;
  for (const auto& [i, v] : a)
    for (int r = 0; r < f.rows(); ++r)
      if (!rackbi::is_zero(f.at(r, i))) detail::acc(out, r, K(v * f.at(r, i)));
  return out;
}

/// Product twisted by a linear map: a >_f b = f(a) > b. Requires f to be a
/// coalgebra morphism fixing the unit (else Error{NotCoalgebraMorphism})
/// that commutes with right multiplications, f(a > b) = a > f(b) (else
/// Error{NotEquivariant}).
template <class K>
Bialg<K> gauge(const Bialg<K>& B, const ExactMatrix& f) {
  require_coalgebra(B, true);
  if (f.rows() != B.dim || f.cols() != B.dim)
    throw Error(Error::Code::DimensionMismatch, "gauge map shape");
  for (int i = 0; i < B.dim; ++i) {
    SparseVec<K> fi = el_map(f, basis_elt<K>(i));
    SparseTen2<K> lhs = bialg_coproduct(B, fi);
    SparseTen2<K> rhs;
    for (const auto& [pq, c] : B.delta[i])
      for (const auto& [p2, cp] : el_map(f, basis_elt<K>(pq.first)))
        for (const auto& [q2, cq] : el_map(f, basis_elt<K>(pq.second)))
          detail::acc(rhs, std::make_pair(p2, q2), K(c * cp * cq));
    if (lhs != rhs || bialg_counit(B, fi) != K(B.eps[i]))
      throw Error(Error::Code::NotCoalgebraMorphism,
                  "gauge map is not a coalgebra morphism at " + B.labels[i]);
  }
  if (el_map(f, B.one) != B.one)
    throw Error(Error::Code::NotCoalgebraMorphism,
                "gauge map does not fix the unit");
  for (int i = 0; i < B.dim; ++i)
    for (int j = 0; j < B.dim; ++j)
      if (el_map(f, B.mu[i][j]) !=
          bialg_product(B, basis_elt<K>(i), el_map(f, basis_elt<K>(j))))
        throw Error(Error::Code::NotEquivariant,
                    "gauge map is not equivariant at (" + B.labels[i] + ", " +
                        B.labels[j] + ")");
  Bialg<K> out = B;
  for (int i = 0; i < B.dim; ++i) {
    SparseVec<K> fi = el_map(f, basis_elt<K>(i));
    for (int j = 0; j < B.dim; ++j)
      out.mu[i][j] = bialg_product(B, fi, basis_elt<K>(j));
  }
  return out;
}

namespace detail {

/// The braiding candidate a⊗b -> sum b1 ⊗ (b2 > a), applied on two chosen
/// adjacent legs of a 3-tensor.
template <class K>
SparseTen3<K> braid_legs(const Bialg<K>& B, const SparseTen3<K>& t,
                         bool first_pair) {
  SparseTen3<K> out;
  for (const auto& [key, c] : t) {
    const auto [x, y, z] = key;
    const int a = first_pair ? x : y;
    const int b = first_pair ? y : z;
    for (const auto& [pq, d] : B.delta[b]) {
      const K cd = c * d;
      for (const auto& [t2, m] : B.mu[pq.second][a]) {
        if (first_pair)
          acc(out, std::make_tuple(pq.first, t2, z), K(cd * m));
        else
          acc(out, std::make_tuple(x, pq.first, t2), K(cd * m));
      }
    }
  }
  return out;
}

}  // namespace detail

/// Checks the braid relation (R⊗id)(id⊗R)(R⊗id) = (id⊗R)(R⊗id)(id⊗R) for
/// the operator R(a⊗b) = sum b1 ⊗ (b2 > a) on every basis 3-tensor.
template <class K>
CheckReport yang_baxter_check(const Bialg<K>& B) {
  require_coalgebra(B, true);
  CheckReport report{"yang-baxter"};
  for (int i = 0; i < B.dim; ++i)
    for (int j = 0; j < B.dim; ++j)
      for (int k = 0; k < B.dim; ++k) {
        SparseTen3<K> start;
        start.emplace(std::make_tuple(i, j, k), K(1));
        SparseTen3<K> lhs = detail::braid_legs(
            B, detail::braid_legs(B, detail::braid_legs(B, start, true), false),
            true);
        SparseTen3<K> rhs = detail::braid_legs(
            B, detail::braid_legs(B, detail::braid_legs(B, start, false), true),
            false);
        ++report.instances;
        if (lhs != rhs)
          report.fail("(" + B.labels[i] + ", " + B.labels[j] + ", " +
                      B.labels[k] + ")");
      }
  return report;
}

/// Scalar extension to h-polynomial coefficients; when trunc is set every
/// coefficient carries that truncation order.
Bialg<HPoly> to_hpoly(const Bialg<Rational>& B,
                      std::optional<int> trunc = std::nullopt);

}  // namespace rackbi
