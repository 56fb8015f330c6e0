#include "rackbi/symcoalg.hpp"

namespace rackbi {

int monomial_degree(const SymMonomial& m) { return static_cast<int>(m.size()); }

std::string monomial_str(const SymMonomial& m,
                         const std::vector<std::string>& names) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t t = 0; t < m.size();) {
    std::size_t run = t;
    while (run < m.size() && m[run] == m[t]) ++run;
    if (!out.empty()) out += "·";
    out += names.at(m[t]);
    if (run - t > 1) out += "^" + std::to_string(run - t);
    t = run;
  }
  return out;
}

SymBasis sym_basis(int dim, int cap) {
  if (dim < 0 || cap < 0)
    throw Error(Error::Code::IndexOutOfRange, "basis parameters");
  SymBasis b;
  b.dim = dim;
  b.cap = cap;
  SymMonomial cur;
  // Depth-first enumeration emits monomials of each degree in lexicographic
  // order; degrees are visited in increasing order.
  auto emit = [&](auto&& self, int degree, int min_idx) -> void {
    if (degree == 0) {
      b.monomials.push_back(cur);
      return;
    }
    for (int i = min_idx; i < dim; ++i) {
      cur.push_back(i);
      self(self, degree - 1, i);
      cur.pop_back();
    }
  };
  for (int d = 0; d <= cap; ++d) emit(emit, d, 0);
  for (std::size_t i = 0; i < b.monomials.size(); ++i)
    b.index.emplace(b.monomials[i], static_cast<int>(i));
  return b;
}

std::vector<MonomialSplit> monomial_splits(const SymMonomial& m) {
  // Collapse to (generator, multiplicity) pairs.
  std::vector<std::pair<int, int>> runs;
  for (int idx : m) {
    if (!runs.empty() && runs.back().first == idx)
      ++runs.back().second;
    else
      runs.emplace_back(idx, 1);
  }
  std::vector<MonomialSplit> out;
  MonomialSplit cur;
  cur.mult = 1;
  auto walk = [&](auto&& self, std::size_t r) -> void {
    if (r == runs.size()) {
      out.push_back(cur);
      return;
    }
    auto [idx, count] = runs[r];
    for (int take = 0; take <= count; ++take) {
      MonomialSplit saved = cur;
      cur.left.insert(cur.left.end(), take, idx);
      cur.right.insert(cur.right.end(), count - take, idx);
      cur.mult *= binomial(count, take);
      self(self, r + 1);
      cur = saved;
    }
  };
  walk(walk, 0);
  return out;
}

std::string coeff_str(const Rational& v) { return rat_str(v); }
std::string coeff_str(const HPoly& v) { return v.str(); }

}  // namespace rackbi
