#include "rackbi/leibniz.hpp"

#include <algorithm>

#include "rackbi/error.hpp"

namespace rackbi {

namespace {

std::vector<std::string> default_names(int dim, const std::string& stem) {
  std::vector<std::string> names;
  names.reserve(dim);
  for (int i = 0; i < dim; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

void check_table(int dim, const std::vector<std::string>& names,
                 const std::vector<Rational>& c) {
  if (dim < 0) throw Error(Error::Code::IndexOutOfRange, "negative dimension");
  if (static_cast<std::size_t>(dim) * dim * dim != c.size())
    throw Error(Error::Code::DimensionMismatch,
                "structure constant table has wrong size");
  if (!names.empty() && static_cast<int>(names.size()) != dim)
    throw Error(Error::Code::DimensionMismatch, "name list has wrong size");
}

}  // namespace

const Rational& LeibnizAlgebra::structure(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim)
    throw Error(Error::Code::IndexOutOfRange, "structure constant index");
  return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
}

QVec LeibnizAlgebra::bracket_basis(int i, int j) const {
  QVec out = qvec_zero(dim);
  for (int k = 0; k < dim; ++k) out[k] = structure(i, j, k);
  return out;
}

QVec LeibnizAlgebra::bracket(const QVec& x, const QVec& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw Error(Error::Code::DimensionMismatch, "bracket operand size");
  QVec out = qvec_zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim; ++j) {
      if (is_zero(y[j])) continue;
      const Rational xy = x[i] * y[j];
      for (int k = 0; k < dim; ++k) out[k] += xy * structure(i, j, k);
    }
  }
  return out;
}

ExactMatrix LeibnizAlgebra::ad(int i) const {
  ExactMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) m.set(k, j, structure(i, j, k));
  return m;
}

std::vector<LeibnizViolation> leibniz_violations(
    int dim, const std::vector<Rational>& c) {
  LeibnizAlgebra h;
  h.dim = dim;
  h.names = default_names(dim, "e");
  h.c = c;
  check_table(dim, h.names, c);
  std::vector<LeibnizViolation> out;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < dim; ++k) {
        // [e_i, [e_j, e_k]] vs [[e_i, e_j], e_k] + [e_j, [e_i, e_k]].
        QVec lhs = h.bracket(qvec_unit(dim, i), h.bracket_basis(j, k));
        QVec rhs = h.bracket(h.bracket_basis(i, j), qvec_unit(dim, k));
        qvec_add_scaled(rhs, Rational(1),
                        h.bracket(qvec_unit(dim, j), h.bracket_basis(i, k)));
        if (lhs != rhs) out.push_back({i, j, k, lhs, rhs});
      }
    }
  }
  return out;
}

LeibnizAlgebra make_leibniz(int dim, std::vector<std::string> names,
                            std::vector<Rational> c) {
  check_table(dim, names, c);
  auto violations = leibniz_violations(dim, c);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw Error(Error::Code::IdentityViolation,
                "left Leibniz identity fails at basis triple (" +
                    std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) +
                    "," + std::to_string(v.k + 1) + "): left " +
                    qvec_str(v.lhs) + ", right " + qvec_str(v.rhs) + " (" +
                    std::to_string(violations.size()) + " failing triples)");
  }
  LeibnizAlgebra h;
  h.dim = dim;
  h.names = names.empty() ? default_names(dim, "e") : std::move(names);
  h.c = std::move(c);
  return h;
}

bool is_lie(const LeibnizAlgebra& h) {
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < h.dim; ++k)
        if (h.structure(i, j, k) != -h.structure(j, i, k)) return false;
  return true;
}

LieAlgebra make_lie(int dim, std::vector<std::string> names,
                    std::vector<Rational> c) {
  LeibnizAlgebra h = make_leibniz(dim, std::move(names), std::move(c));
  if (!is_lie(h))
    throw Error(Error::Code::IdentityViolation,
                "bracket is not antisymmetric");
  LieAlgebra g;
  static_cast<LeibnizAlgebra&>(g) = std::move(h);
  return g;
}

Subspace squares_ideal(const LeibnizAlgebra& h) {
  // [x,x] polarizes to the squares [e_i,e_i] and the sums
  // [e_i,e_j] + [e_j,e_i] for i < j.
  std::vector<QVec> gens;
  for (int i = 0; i < h.dim; ++i) {
    gens.push_back(h.bracket_basis(i, i));
    for (int j = i + 1; j < h.dim; ++j) {
      QVec v = h.bracket_basis(i, j);
      qvec_add_scaled(v, Rational(1), h.bracket_basis(j, i));
      gens.push_back(std::move(v));
    }
  }
  return span(h.dim, gens);
}

Subspace left_center(const LeibnizAlgebra& h) {
  // x in z(h) iff sum_i x_i c_{ij}^k = 0 for all j, k.
  ExactMatrix m(h.dim * h.dim, h.dim);
  for (int j = 0; j < h.dim; ++j)
    for (int k = 0; k < h.dim; ++k)
      for (int i = 0; i < h.dim; ++i)
        m.set(j * h.dim + k, i, h.structure(i, j, k));
  return span(h.dim, kernel_basis(m));
}

ExactMatrix Quotient::action(int a) const {
  if (a < 0 || a >= g.dim)
    throw Error(Error::Code::IndexOutOfRange, "quotient generator index");
  ExactMatrix m(h.dim, h.dim);
  const QVec rep = lift.col(a);
  for (int j = 0; j < h.dim; ++j) {
    QVec img = h.bracket(rep, qvec_unit(h.dim, j));
    for (int k = 0; k < h.dim; ++k) m.set(k, j, img[k]);
  }
  return m;
}

Quotient quotient_lie(const LeibnizAlgebra& h, const Subspace& z) {
  if (z.ambient != h.dim)
    throw Error(Error::Code::DimensionMismatch, "ideal ambient dimension");
  if (!contains(z, squares_ideal(h)))
    throw Error(Error::Code::IdealOutOfRange,
                "ideal does not contain the squares");
  if (!contains(left_center(h), z))
    throw Error(Error::Code::IdealOutOfRange,
                "ideal is not inside the left center");
  for (const auto& row : z.basis)
    for (int i = 0; i < h.dim; ++i)
      if (!contains(z, h.bracket(qvec_unit(h.dim, i), row)))
        throw Error(Error::Code::NotAnIdeal,
                    "subspace is not stable under left multiplication");

  // Complement coordinates: the non-pivot columns of the ideal's echelon
  // basis, in ascending order.
  std::vector<bool> is_pivot(h.dim, false);
  for (int c : z.pivot_cols) is_pivot[c] = true;
  std::vector<int> complement;
  for (int c = 0; c < h.dim; ++c)
    if (!is_pivot[c]) complement.push_back(c);
  const int gdim = static_cast<int>(complement.size());

  ExactMatrix lift(h.dim, gdim);
  for (int a = 0; a < gdim; ++a) lift.set(complement[a], a, Rational(1));

  ExactMatrix proj(gdim, h.dim);
  for (int i = 0; i < h.dim; ++i) {
    QVec r = qvec_unit(h.dim, i);
    for (std::size_t t = 0; t < z.basis.size(); ++t) {
      const Rational c = r[z.pivot_cols[t]];
      if (!is_zero(c)) qvec_add_scaled(r, -c, z.basis[t]);
    }
    for (int a = 0; a < gdim; ++a) proj.set(a, i, r[complement[a]]);
  }

  std::vector<std::string> names;
  for (int a = 0; a < gdim; ++a) names.push_back(h.names[complement[a]]);
  std::vector<Rational> c(static_cast<std::size_t>(gdim) * gdim * gdim,
                          Rational(0));
  for (int a = 0; a < gdim; ++a) {
    for (int b = 0; b < gdim; ++b) {
      QVec img = proj.apply(h.bracket(lift.col(a), lift.col(b)));
      for (int k = 0; k < gdim; ++k)
        c[(static_cast<std::size_t>(a) * gdim + b) * gdim + k] = img[k];
    }
  }

  Quotient q;
  q.h = h;
  q.ideal = z;
  q.g = make_lie(gdim, std::move(names), std::move(c));
  q.proj = std::move(proj);
  q.lift = std::move(lift);
  return q;
}

Quotient canonical_quotient(const LeibnizAlgebra& h) {
  return quotient_lie(h, squares_ideal(h));
}

LeibnizAlgebra hemi_semidirect(const Quotient& q) {
  const int hd = q.h.dim;
  const int gd = q.g.dim;
  const int n = hd + gd;
  std::vector<Rational> c(static_cast<std::size_t>(n) * n * n, Rational(0));
  auto put = [&](int i, int j, int k, const Rational& v) {
    c[(static_cast<std::size_t>(i) * n + j) * n + k] = v;
  };
  // [(x,a),(y,b)] = (a.y, [a,b]): only generators from the g block act.
  for (int a = 0; a < gd; ++a) {
    ExactMatrix act = q.action(a);
    for (int j = 0; j < hd; ++j)
      for (int k = 0; k < hd; ++k) put(hd + a, j, k, act.at(k, j));
    for (int b = 0; b < gd; ++b)
      for (int k = 0; k < gd; ++k)
        put(hd + a, hd + b, hd + k, q.g.structure(a, b, k));
  }
  std::vector<std::string> names = q.h.names;
  for (int a = 0; a < gd; ++a)
    names.push_back("xi" + std::to_string(a + 1));
  return make_leibniz(n, std::move(names), std::move(c));
}

LeibnizAlgebra catalog(const std::string& name) {
  auto table = [](int dim) {
    return std::vector<Rational>(static_cast<std::size_t>(dim) * dim * dim,
                                 Rational(0));
  };
  auto put = [](std::vector<Rational>& c, int dim, int i, int j, int k,
                long v) {
    c[(static_cast<std::size_t>(i) * dim + j) * dim + k] = Rational(v);
  };

  if (name.rfind("abelian", 0) == 0 && name.size() == 8) {
    int n = name[7] - '0';
    if (n >= 1 && n <= 4) return make_leibniz(n, {}, table(n));
  }
  if (name == "sq2") {
    auto c = table(2);
    put(c, 2, 0, 0, 1, 1);  // [e1,e1] = e2
    return make_leibniz(2, {}, std::move(c));
  }
  if (name == "heisenberg") {
    auto c = table(3);
    put(c, 3, 0, 1, 2, 1);   // [e1,e2] = e3
    put(c, 3, 1, 0, 2, -1);  // [e2,e1] = -e3
    return make_leibniz(3, {}, std::move(c));
  }
  if (name == "sl2") {
    auto c = table(3);
    put(c, 3, 0, 1, 2, 1);   // [e,f] = h
    put(c, 3, 1, 0, 2, -1);  // [f,e] = -h
    put(c, 3, 2, 0, 0, 2);   // [h,e] = 2e
    put(c, 3, 0, 2, 0, -2);  // [e,h] = -2e
    put(c, 3, 2, 1, 1, -2);  // [h,f] = -2f
    put(c, 3, 1, 2, 1, 2);   // [f,h] = 2f
    return make_leibniz(3, {"e", "f", "h"}, std::move(c));
  }
  if (name == "nonnil3") {
    auto c = table(3);
    put(c, 3, 2, 0, 0, 1);  // [u3,u1] = u1
    put(c, 3, 2, 1, 1, 1);  // [u3,u2] = u2
    return make_leibniz(3, {"u1", "u2", "u3"}, std::move(c));
  }
  if (name == "hemi_sq2")
    return hemi_semidirect(canonical_quotient(catalog("sq2")));
  if (name == "hemi_heisenberg") {
    LeibnizAlgebra h = catalog("heisenberg");
    return hemi_semidirect(quotient_lie(h, left_center(h)));
  }
  throw Error(Error::Code::UnknownName, "unknown catalog name '" + name + "'");
}

LeibnizMorphism make_morphism(const LeibnizAlgebra& source,
                              const LeibnizAlgebra& target,
                              const ExactMatrix& matrix) {
  if (matrix.rows() != target.dim || matrix.cols() != source.dim)
    throw Error(Error::Code::DimensionMismatch, "morphism matrix shape");
  for (int i = 0; i < source.dim; ++i) {
    for (int j = 0; j < source.dim; ++j) {
      QVec lhs = matrix.apply(source.bracket_basis(i, j));
      QVec rhs = target.bracket(matrix.col(i), matrix.col(j));
      if (lhs != rhs)
        throw Error(Error::Code::IdentityViolation,
                    "map does not intertwine brackets at basis pair (" +
                        std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ")");
    }
  }
  return LeibnizMorphism{source, target, matrix};
}

}  // namespace rackbi
