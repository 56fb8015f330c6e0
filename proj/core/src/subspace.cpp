#include "rackbi/subspace.hpp"

#include "rackbi/error.hpp"

namespace rackbi {

Subspace span(int ambient, const std::vector<QVec>& generators) {
  Echelon e = rref(generators, ambient);
  Subspace s;
  s.ambient = ambient;
  s.basis = std::move(e.rows);
  s.pivot_cols = std::move(e.pivot_cols);
  return s;
}

bool contains(const Subspace& space, const QVec& v) {
  if (static_cast<int>(v.size()) != space.ambient)
    throw Error(Error::Code::DimensionMismatch, "vector/subspace ambient");
  QVec r = v;
  for (std::size_t i = 0; i < space.basis.size(); ++i) {
    const Rational c = r[space.pivot_cols[i]];
    if (!is_zero(c)) qvec_add_scaled(r, -c, space.basis[i]);
  }
  return qvec_is_zero(r);
}

bool contains(const Subspace& outer, const Subspace& inner) {
  if (outer.ambient != inner.ambient)
    throw Error(Error::Code::DimensionMismatch, "subspace ambients differ");
  for (const auto& row : inner.basis)
    if (!contains(outer, row)) return false;
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient == b.ambient && a.basis == b.basis;
}

}  // namespace rackbi
