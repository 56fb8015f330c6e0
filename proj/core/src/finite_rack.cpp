#include "rackbi/finite_rack.hpp"

#include <algorithm>
#include <numeric>

namespace rackbi {

namespace {

std::string triple_str(int x, int y, int z) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ", " +
         std::to_string(z) + ")";
}

}  // namespace

void validate_rack(const FiniteRack& x) {
  const auto bad = [](const std::string& what) {
    throw Error(Error::Code::InvalidRack, what);
  };
  const int n = x.size;
  if (n <= 0) bad("rack must be nonempty");
  if (x.unit < 0 || x.unit >= n) bad("unit index out of range");
  if (static_cast<int>(x.op.size()) != n) bad("operation table is not n x n");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(x.op[a].size()) != n)
      bad("operation table is not n x n");
    std::vector<bool> seen(n, false);
    for (int b = 0; b < n; ++b) {
      const int v = x.op[a][b];
      if (v < 0 || v >= n) bad("table value out of range");
      if (seen[v])
        bad("row " + std::to_string(a) + " is not a bijection");
      seen[v] = true;
    }
  }
  for (int b = 0; b < n; ++b)
    if (x.op[x.unit][b] != b)
      bad("unit does not act as the identity at " + std::to_string(b));
  for (int a = 0; a < n; ++a)
    if (x.op[a][x.unit] != x.unit)
      bad("unit is not absorbed by " + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (x.op[a][x.op[b][c]] != x.op[x.op[a][b]][x.op[a][c]])
          bad("self-distributivity fails at " + triple_str(a, b, c));
}

FiniteRack dihedral_rack(int m) {
  if (m <= 0) throw Error(Error::Code::InvalidRack, "modulus must be positive");
  FiniteRack x;
  x.size = m + 1;
  x.unit = m;
  x.op.assign(m + 1, std::vector<int>(m + 1, m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) x.op[a][b] = ((2 * a - b) % m + m) % m;
  for (int b = 0; b <= m; ++b) x.op[m][b] = b;
  for (int a = 0; a <= m; ++a) x.op[a][m] = m;
  validate_rack(x);
  return x;
}

Bialg<Rational> rack_algebra(const FiniteRack& x) {
  validate_rack(x);
  Bialg<Rational> b;
  b.dim = x.size;
  b.labels.reserve(x.size);
  for (int i = 0; i < x.size; ++i)
    b.labels.push_back(i == x.unit ? "e" : "x" + std::to_string(i));
  b.delta.resize(x.size);
  for (int i = 0; i < x.size; ++i)
    b.delta[i].emplace(std::make_pair(i, i), Rational(1));
  b.eps.assign(x.size, Rational(1));
  b.one.emplace(x.unit, Rational(1));
  b.mu.assign(x.size, std::vector<SparseVec<Rational>>(x.size));
  for (int i = 0; i < x.size; ++i)
    for (int j = 0; j < x.size; ++j)
      b.mu[i][j].emplace(x.op[i][j], Rational(1));
  return b;
}

FiniteGroup make_group(const std::vector<std::vector<int>>& mul) {
  const auto bad = [](const std::string& what) {
    throw Error(Error::Code::IdentityViolation, what);
  };
  const int n = static_cast<int>(mul.size());
  if (n == 0) bad("group must be nonempty");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n) bad("multiplication table shape");
    for (int v : row)
      if (v < 0 || v >= n) bad("multiplication table value out of range");
  }
  int unit = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = mul[e][a] == a && mul[a][e] == a;
    if (ok) {
      unit = e;
      break;
    }
  }
  if (unit < 0) bad("no two-sided unit");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          bad("associativity fails at " + triple_str(a, b, c));
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul[a][b] == unit && mul[b][a] == unit) {
        inv[a] = b;
        break;
      }
    if (inv[a] < 0) bad("element " + std::to_string(a) + " has no inverse");
  }
  return FiniteGroup{n, unit, mul, inv};
}

FiniteGroup symmetric_group(int n) {
  if (n <= 0)
    throw Error(Error::Code::IdentityViolation, "degree must be positive");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> comp(n);
      for (int t = 0; t < n; ++t) comp[t] = perms[a][perms[b][t]];
      mul[a][b] = static_cast<int>(
          std::lower_bound(perms.begin(), perms.end(), comp) - perms.begin());
    }
  return make_group(mul);
}

FiniteRack conjugation_rack(const FiniteGroup& g) {
  FiniteRack x;
  x.size = g.size;
  x.unit = g.unit;
  x.op.assign(g.size, std::vector<int>(g.size));
  for (int a = 0; a < g.size; ++a)
    for (int b = 0; b < g.size; ++b)
      x.op[a][b] = g.mul[g.mul[a][b]][g.inv[a]];
  validate_rack(x);
  return x;
}

AugmentedFiniteRack from_augmented_rack(
    const FiniteGroup& g, const std::vector<int>& p,
    const std::vector<std::vector<int>>& action, int unit) {
  const int m = static_cast<int>(p.size());
  if (static_cast<int>(action.size()) != g.size)
    throw Error(Error::Code::DimensionMismatch, "action table rows");
  for (const auto& row : action) {
    if (static_cast<int>(row.size()) != m)
      throw Error(Error::Code::DimensionMismatch, "action table columns");
    for (int v : row)
      if (v < 0 || v >= m)
        throw Error(Error::Code::IndexOutOfRange, "action value out of range");
  }
  for (int v : p)
    if (v < 0 || v >= g.size)
      throw Error(Error::Code::IndexOutOfRange, "augmentation value");
  for (int t = 0; t < m; ++t)
    if (action[g.unit][t] != t)
      throw Error(Error::Code::IdentityViolation,
                  "group unit does not act as the identity");
  for (int a = 0; a < g.size; ++a)
    for (int b = 0; b < g.size; ++b)
      for (int t = 0; t < m; ++t)
        if (action[g.mul[a][b]][t] != action[a][action[b][t]])
          throw Error(Error::Code::IdentityViolation,
                      "action is not compatible with multiplication");
  for (int a = 0; a < g.size; ++a)
    for (int t = 0; t < m; ++t)
      if (p[action[a][t]] != g.mul[g.mul[a][p[t]]][g.inv[a]])
        throw Error(Error::Code::NotEquivariantAugmentation,
                    "p(g.x) differs from g p(x) g^{-1} at g=" +
                        std::to_string(a) + ", x=" + std::to_string(t));
  AugmentedFiniteRack out;
  out.g = g;
  out.p = p;
  out.action = action;
  out.x.size = m;
  out.x.unit = unit;
  out.x.op.assign(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) out.x.op[a][b] = action[p[a]][b];
  validate_rack(out.x);
  return out;
}

AugmentedFiniteRack conjugation_augmented(const FiniteGroup& g) {
  std::vector<int> p(g.size);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> action(g.size, std::vector<int>(g.size));
  for (int a = 0; a < g.size; ++a)
    for (int t = 0; t < g.size; ++t)
      action[a][t] = g.mul[g.mul[a][t]][g.inv[a]];
  return from_augmented_rack(g, p, action, g.unit);
}

CheckReport yd_check(const AugmentedFiniteRack& a) {
  CheckReport report{"yetter-drinfeld"};
  for (int h = 0; h < a.g.size; ++h)
    for (int t = 0; t < a.x.size; ++t) {
      ++report.instances;
      const int moved = a.action[h][t];
      const int lhs = a.p[moved];
      const int rhs = a.g.mul[a.g.mul[h][a.p[t]]][a.g.inv[h]];
      if (lhs != rhs)
        report.fail("g=" + std::to_string(h) + ", x=" + std::to_string(t) +
                    ": p(g.x)=" + std::to_string(lhs) +
                    ", g p(x) g^{-1}=" + std::to_string(rhs));
    }
  return report;
}

}  // namespace rackbi
