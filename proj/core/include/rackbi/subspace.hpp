#pragma once

#include <vector>

#include "rackbi/matrix.hpp"

namespace rackbi {

/// Subspace of Q^ambient held in a canonical form: the basis rows are the
/// nonzero rows of a reduced row echelon form, so two subspaces are equal
/// iff their basis fields are equal.
struct Subspace {
  int ambient = 0;
  std::vector<QVec> basis;
  std::vector<int> pivot_cols;

  int dim() const { return static_cast<int>(basis.size()); }
};

Subspace span(int ambient, const std::vector<QVec>& generators);
bool contains(const Subspace& space, const QVec& v);
bool contains(const Subspace& outer, const Subspace& inner);
bool operator==(const Subspace& a, const Subspace& b);

}  // namespace rackbi
