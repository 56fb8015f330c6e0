#include "rackbi/defcohom.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rackbi/error.hpp"

namespace rackbi {

namespace {

constexpr long long kTupleLimit = 10'000'000;

void check_cochain(const Bialg<Rational>& r, const Cochain& w) {
  if (w.n < 1)
    throw Error(Error::Code::IndexOutOfRange,
                "cochain degree must be at least 1, got " + std::to_string(w.n));
  const int cols = tuple_count(r.dim, w.n);
  if (w.matrix.rows() != r.dim || w.matrix.cols() != cols)
    throw Error(Error::Code::DimensionMismatch,
                "cochain matrix must be " + std::to_string(r.dim) + "x" +
                    std::to_string(cols) + ", got " +
                    std::to_string(w.matrix.rows()) + "x" +
                    std::to_string(w.matrix.cols()));
}

std::string tuple_label(const Bialg<Rational>& r, const std::vector<int>& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k > 0) out += ", ";
    out += r.labels[t[k]];
  }
  return out + ")";
}

void add_scaled(ExactMatrix& target, const Rational& s, const ExactMatrix& m) {
  for (const auto& [rc, v] : m.entries()) {
    const Rational sv = s * v;
    target.add_at(rc.first, rc.second, sv);
  }
}

void acc_scaled(SparseVec<Rational>& out, const Rational& c,
                const SparseVec<Rational>& v) {
  for (const auto& [k, x] : v) {
    const Rational cx = c * x;
    detail::acc(out, k, cx);
  }
}

/// Right-nested product of a nonempty list of basis elements.
SparseVec<Rational> mu_of(const Bialg<Rational>& r,
                          const std::vector<int>& args) {
  SparseVec<Rational> acc = basis_elt<Rational>(args.back());
  for (auto it = args.rbegin() + 1; it != args.rend(); ++it)
    acc = bialg_product(r, basis_elt<Rational>(*it), acc);
  return acc;
}

/// Iterated coproduct of one basis element into m components.
std::vector<std::pair<std::vector<int>, Rational>> iterated_delta(
    const Bialg<Rational>& r, int j, int m) {
  std::vector<std::pair<std::vector<int>, Rational>> out{
      {std::vector<int>{j}, Rational(1)}};
  for (int step = 1; step < m; ++step) {
    std::map<std::vector<int>, Rational> next;
    for (const auto& [t, c] : out) {
      for (const auto& [pq, d] : r.delta[t.back()]) {
        std::vector<int> nt(t.begin(), t.end() - 1);
        nt.push_back(pq.first);
        nt.push_back(pq.second);
        const Rational nc = c * d;
        detail::acc(next, nt, nc);
      }
    }
    out.assign(next.begin(), next.end());
  }
  return out;
}

/// Leg-by-leg coproduct of a basis tuple (possibly empty):
/// all (first halves, second halves, coefficient).
std::vector<std::tuple<std::vector<int>, std::vector<int>, Rational>>
tuple_splits(const Bialg<Rational>& r, const std::vector<int>& t) {
  std::vector<std::tuple<std::vector<int>, std::vector<int>, Rational>> out;
  out.emplace_back(std::vector<int>{}, std::vector<int>{}, Rational(1));
  for (int leg : t) {
    std::vector<std::tuple<std::vector<int>, std::vector<int>, Rational>> next;
    for (const auto& [p, q, c] : out) {
      for (const auto& [pq, d] : r.delta[leg]) {
        std::vector<int> np = p;
        np.push_back(pq.first);
        std::vector<int> nq = q;
        nq.push_back(pq.second);
        Rational nc = c * d;
        next.emplace_back(std::move(np), std::move(nq), std::move(nc));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// out += coeff * w(legs), expanding the sparse legs multilinearly.
void expand_legs(const Cochain& w, int dim,
                 const std::vector<SparseVec<Rational>>& legs, std::size_t pos,
                 std::vector<int>& tuple, const Rational& coeff,
                 SparseVec<Rational>& out) {
  if (pos == legs.size()) {
    const int col = tuple_index(tuple, dim);
    for (int row = 0; row < w.matrix.rows(); ++row) {
      const Rational& x = w.matrix.at(row, col);
      if (is_zero(x)) continue;
      const Rational cx = coeff * x;
      detail::acc(out, row, cx);
    }
    return;
  }
  for (const auto& [b, c] : legs[pos]) {
    tuple[pos] = b;
    const Rational nc = coeff * c;
    expand_legs(w, dim, legs, pos + 1, tuple, nc, out);
  }
}

/// Flattened row-major copy of a cochain matrix.
QVec flatten(const Cochain& w) {
  const int cols = w.matrix.cols();
  QVec v(static_cast<std::size_t>(w.matrix.rows()) * cols, Rational(0));
  for (const auto& [rc, x] : w.matrix.entries())
    v[static_cast<std::size_t>(rc.first) * cols + rc.second] = x;
  return v;
}

}  // namespace

int tuple_count(int dim, int n) {
  if (dim < 1 || n < 0)
    throw Error(Error::Code::IndexOutOfRange,
                "tuple space needs dim >= 1 and n >= 0");
  long long out = 1;
  for (int k = 0; k < n; ++k) {
    out *= dim;
    if (out > kTupleLimit)
      throw Error(Error::Code::TooLarge,
                  "tuple space of size " + std::to_string(dim) + "^" +
                      std::to_string(n) + " exceeds the column limit");
  }
  return static_cast<int>(out);
}

int tuple_index(const std::vector<int>& tuple, int dim) {
  long long out = 0;
  for (int b : tuple) {
    if (b < 0 || b >= dim)
      throw Error(Error::Code::IndexOutOfRange,
                  "basis index " + std::to_string(b) + " out of range in tuple");
    out = out * dim + b;
    if (out > kTupleLimit)
      throw Error(Error::Code::TooLarge, "tuple index exceeds the column limit");
  }
  return static_cast<int>(out);
}

std::vector<int> tuple_at(int index, int dim, int n) {
  if (index < 0 || index >= tuple_count(dim, n))
    throw Error(Error::Code::IndexOutOfRange,
                "tuple index " + std::to_string(index) + " out of range");
  std::vector<int> out(n);
  for (int k = n - 1; k >= 0; --k) {
    out[k] = index % dim;
    index /= dim;
  }
  return out;
}

Cochain zero_cochain(const Bialg<Rational>& r, int n) {
  if (n < 1)
    throw Error(Error::Code::IndexOutOfRange,
                "cochain degree must be at least 1, got " + std::to_string(n));
  return {n, ExactMatrix(r.dim, tuple_count(r.dim, n))};
}

SparseVec<Rational> cochain_value(const Cochain& w, const std::vector<int>& tuple,
                                  int dim) {
  const int col = tuple_index(tuple, dim);
  if (col >= w.matrix.cols())
    throw Error(Error::Code::IndexOutOfRange, "tuple column out of range");
  SparseVec<Rational> out;
  for (int row = 0; row < w.matrix.rows(); ++row) {
    const Rational& x = w.matrix.at(row, col);
    if (!is_zero(x)) out.emplace(row, x);
  }
  return out;
}

Cochain mu_n(const Bialg<Rational>& r, int n) {
  check_tables(r, true);
  if (n < 1)
    throw Error(Error::Code::IndexOutOfRange,
                "iterated product needs n >= 1, got " + std::to_string(n));
  const int cols = tuple_count(r.dim, n);
  Cochain out{n, ExactMatrix(r.dim, cols)};
  for (int c = 0; c < cols; ++c) {
    const SparseVec<Rational> v = mu_of(r, tuple_at(c, r.dim, n));
    for (const auto& [row, x] : v) out.matrix.set(row, c, x);
  }
  return out;
}

CheckReport is_coderivation(const Bialg<Rational>& r, const Cochain& w) {
  check_tables(r, true);
  check_cochain(r, w);
  CheckReport report("coderivation-along-iterated-product");
  const int cols = tuple_count(r.dim, w.n);
  for (int c = 0; c < cols; ++c) {
    const std::vector<int> t = tuple_at(c, r.dim, w.n);
    const SparseTen2<Rational> lhs =
        bialg_coproduct(r, cochain_value(w, t, r.dim));
    SparseTen2<Rational> rhs;
    for (const auto& [p, q, coeff] : tuple_splits(r, t)) {
      const SparseVec<Rational> wp = cochain_value(w, p, r.dim);
      const SparseVec<Rational> wq = cochain_value(w, q, r.dim);
      const SparseVec<Rational> mp = mu_of(r, p);
      const SparseVec<Rational> mq = mu_of(r, q);
      for (const auto& [a, x] : wp)
        for (const auto& [b, y] : mq) {
          const Rational v = coeff * x * y;
          detail::acc(rhs, std::make_pair(a, b), v);
        }
      for (const auto& [a, x] : mp)
        for (const auto& [b, y] : wq) {
          const Rational v = coeff * x * y;
          detail::acc(rhs, std::make_pair(a, b), v);
        }
    }
    ++report.instances;
    if (lhs != rhs)
      report.fail(tuple_label(r, t) + ": lhs = " + ten2_str(r, lhs) +
                  ", rhs = " + ten2_str(r, rhs));
  }
  return report;
}

std::vector<Cochain> coderivation_space(const Bialg<Rational>& r, int n,
                                        long long size_cap) {
  check_tables(r, true);
  if (n < 1)
    throw Error(Error::Code::IndexOutOfRange,
                "coderivation degree must be at least 1, got " + std::to_string(n));
  if (!is_cocommutative(r))
    throw Error(Error::Code::NotCocommutative,
                "coderivation spaces need a cocommutative coalgebra");
  const int dim = r.dim;
  const int cols = tuple_count(dim, n);
  const long long unknowns = static_cast<long long>(dim) * cols;
  if (unknowns > size_cap)
    throw Error(Error::Code::TooLarge,
                "coderivation system has " + std::to_string(unknowns) +
                    " unknowns, cap is " + std::to_string(size_cap));
  // Unknown x_{row, col} (entry of the cochain matrix) lives at flat index
  // row * cols + col. One equation per input tuple and output tensor slot.
  std::vector<QVec> rows;
  for (int c = 0; c < cols; ++c) {
    const std::vector<int> t = tuple_at(c, dim, n);
    std::map<std::pair<int, int>, std::map<long long, Rational>> eq;
    for (int row = 0; row < dim; ++row)
      for (const auto& [ab, d] : r.delta[row])
        detail::acc(eq[ab], static_cast<long long>(row) * cols + c, d);
    for (const auto& [p, q, coeff] : tuple_splits(r, t)) {
      const int cp = tuple_index(p, dim);
      const int cq = tuple_index(q, dim);
      const SparseVec<Rational> mp = mu_of(r, p);
      const SparseVec<Rational> mq = mu_of(r, q);
      for (int a = 0; a < dim; ++a)
        for (const auto& [b, y] : mq) {
          const Rational v = -(coeff * y);
          detail::acc(eq[std::make_pair(a, b)],
                      static_cast<long long>(a) * cols + cp, v);
        }
      for (const auto& [a, x] : mp)
        for (int b = 0; b < dim; ++b) {
          const Rational v = -(coeff * x);
          detail::acc(eq[std::make_pair(a, b)],
                      static_cast<long long>(b) * cols + cq, v);
        }
    }
    for (const auto& [ab, rowmap] : eq) {
      if (rowmap.empty()) continue;
      QVec dense(static_cast<std::size_t>(unknowns), Rational(0));
      for (const auto& [k, v] : rowmap) dense[static_cast<std::size_t>(k)] = v;
      rows.push_back(std::move(dense));
    }
  }
  const ExactMatrix sys =
      ExactMatrix::from_rows(rows, static_cast<int>(unknowns));
  std::vector<Cochain> out;
  for (const QVec& v : kernel_basis(sys)) {
    Cochain w{n, ExactMatrix(dim, cols)};
    for (int row = 0; row < dim; ++row)
      for (int c = 0; c < cols; ++c) {
        const Rational& x = v[static_cast<std::size_t>(row) * cols + c];
        if (!is_zero(x)) w.matrix.set(row, c, x);
      }
    out.push_back(std::move(w));
  }
  return out;
}

Cochain face(const Bialg<Rational>& r, const Cochain& w, int i, int value) {
  check_tables(r, true);
  check_cochain(r, w);
  const int n = w.n;
  const int dim = r.dim;
  if (i < 1 || i > n)
    throw Error(Error::Code::IndexOutOfRange,
                "face slot " + std::to_string(i) + " out of range 1.." +
                    std::to_string(n));
  if (value != 0 && value != 1)
    throw Error(Error::Code::IndexOutOfRange,
                "face value must be 0 or 1, got " + std::to_string(value));
  const int cols = tuple_count(dim, n + 1);
  Cochain out{n + 1, ExactMatrix(dim, cols)};
  for (int c = 0; c < cols; ++c) {
    const std::vector<int> t = tuple_at(c, dim, n + 1);
    SparseVec<Rational> val;
    if (value == 1) {
      const std::vector<int> prefix(t.begin(), t.begin() + (i - 1));
      for (const auto& [p, q, coeff] : tuple_splits(r, prefix)) {
        std::vector<int> left = p;
        left.push_back(t[i - 1]);
        std::vector<int> rest = q;
        for (int k = i; k <= n; ++k) rest.push_back(t[k]);
        const SparseVec<Rational> u = mu_of(r, left);
        const SparseVec<Rational> wv = cochain_value(w, rest, dim);
        acc_scaled(val, coeff, bialg_product(r, u, wv));
      }
    } else {
      const int m = n + 1 - i;
      for (const auto& [comps, coeff] : iterated_delta(r, t[i - 1], m)) {
        std::vector<SparseVec<Rational>> legs;
        legs.reserve(n);
        for (int k = 0; k < i - 1; ++k) legs.push_back(basis_elt<Rational>(t[k]));
        for (int s = 0; s < m; ++s)
          legs.push_back(bialg_product(r, basis_elt<Rational>(comps[s]),
                                       basis_elt<Rational>(t[i + s])));
        std::vector<int> tuple(n);
        expand_legs(w, dim, legs, 0, tuple, coeff, val);
      }
    }
    for (const auto& [row, x] : val) out.matrix.set(row, c, x);
  }
  return out;
}

Cochain face_last(const Bialg<Rational>& r, const Cochain& w) {
  check_tables(r, true);
  check_cochain(r, w);
  const int n = w.n;
  const int dim = r.dim;
  const int cols = tuple_count(dim, n + 1);
  Cochain out{n + 1, ExactMatrix(dim, cols)};
  for (int c = 0; c < cols; ++c) {
    const std::vector<int> t = tuple_at(c, dim, n + 1);
    const std::vector<int> prefix(t.begin(), t.begin() + (n - 1));
    SparseVec<Rational> val;
    for (const auto& [p, q, coeff] : tuple_splits(r, prefix)) {
      std::vector<int> warg = p;
      warg.push_back(t[n - 1]);
      std::vector<int> marg = q;
      marg.push_back(t[n]);
      const SparseVec<Rational> wv = cochain_value(w, warg, dim);
      const SparseVec<Rational> u = mu_of(r, marg);
      acc_scaled(val, coeff, bialg_product(r, wv, u));
    }
    for (const auto& [row, x] : val) out.matrix.set(row, c, x);
  }
  return out;
}

Cochain differential(const Bialg<Rational>& r, const Cochain& w) {
  const int n = w.n;
  Cochain out = zero_cochain(r, n + 1);
  Rational sign(1);
  for (int i = 1; i <= n; ++i) {
    add_scaled(out.matrix, sign, face(r, w, i, 1).matrix);
    const Rational neg = -sign;
    add_scaled(out.matrix, neg, face(r, w, i, 0).matrix);
    sign = -sign;
  }
  const Rational last = (n % 2 == 1) ? Rational(1) : Rational(-1);
  add_scaled(out.matrix, last, face_last(r, w).matrix);
  return out;
}

std::vector<CheckReport> verify_mu_n_properties(const Bialg<Rational>& r,
                                                int max_n) {
  check_tables(r, true);
  CheckReport head("split-off-head-of-iterated-product");
  CheckReport dist("distributed-slot-of-iterated-product");
  for (int n = 2; n <= max_n; ++n) {
    const int dim = r.dim;
    const Cochain mun = mu_n(r, n);
    const int cols_n = tuple_count(dim, n);
    for (int c = 0; c < cols_n; ++c) {
      const std::vector<int> t = tuple_at(c, dim, n);
      const SparseVec<Rational> expect = mu_of(r, t);
      for (int i = 1; i < n; ++i) {
        SparseVec<Rational> got;
        const std::vector<int> prefix(t.begin(), t.begin() + (i - 1));
        for (const auto& [p, q, coeff] : tuple_splits(r, prefix)) {
          std::vector<int> left = p;
          left.push_back(t[i - 1]);
          std::vector<int> right = q;
          for (int k = i; k < n; ++k) right.push_back(t[k]);
          acc_scaled(got, coeff,
                     bialg_product(r, mu_of(r, left), mu_of(r, right)));
        }
        ++head.instances;
        if (got != expect)
          head.fail("n=" + std::to_string(n) + ", i=" + std::to_string(i) +
                    ", " + tuple_label(r, t));
      }
    }
    const int cols_n1 = tuple_count(dim, n + 1);
    for (int c = 0; c < cols_n1; ++c) {
      const std::vector<int> t = tuple_at(c, dim, n + 1);
      const SparseVec<Rational> expect = mu_of(r, t);
      for (int i = 1; i <= n; ++i) {
        const int m = n + 1 - i;
        SparseVec<Rational> got;
        for (const auto& [comps, coeff] : iterated_delta(r, t[i - 1], m)) {
          std::vector<SparseVec<Rational>> legs;
          legs.reserve(n);
          for (int k = 0; k < i - 1; ++k)
            legs.push_back(basis_elt<Rational>(t[k]));
          for (int s = 0; s < m; ++s)
            legs.push_back(bialg_product(r, basis_elt<Rational>(comps[s]),
                                         basis_elt<Rational>(t[i + s])));
          std::vector<int> tuple(n);
          expand_legs(mun, dim, legs, 0, tuple, coeff, got);
        }
        ++dist.instances;
        if (got != expect)
          dist.fail("n=" + std::to_string(n) + ", i=" + std::to_string(i) +
                    ", " + tuple_label(r, t));
      }
    }
  }
  return {head, dist};
}

std::vector<CheckReport> verify_relations(const Bialg<Rational>& r, int n,
                                          long long size_cap) {
  const std::vector<Cochain> basis = coderivation_space(r, n, size_cap);
  CheckReport cubical("face-exchange-law");
  CheckReport extra_inner("top-face-commutes-with-inner-faces");
  CheckReport extra_top("top-face-self-relation");
  CheckReport coder("faces-preserve-coderivations");
  CheckReport dd("differential-squares-to-zero");
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Cochain& w = basis[k];
    const std::string tag = "basis #" + std::to_string(k + 1);
    std::vector<std::vector<Cochain>> f(n + 1, std::vector<Cochain>(2));
    for (int i = 1; i <= n; ++i)
      for (int v = 0; v < 2; ++v) f[i][v] = face(r, w, i, v);
    const Cochain top = face_last(r, w);

    for (int i = 1; i <= n; ++i)
      for (int v = 0; v < 2; ++v) {
        const CheckReport c = is_coderivation(r, f[i][v]);
        ++coder.instances;
        if (!c.pass)
          coder.fail(tag + ", face(" + std::to_string(i) + "," +
                     std::to_string(v) + "): " + c.counterexample);
      }
    {
      const CheckReport c = is_coderivation(r, top);
      ++coder.instances;
      if (!c.pass) coder.fail(tag + ", top face: " + c.counterexample);
    }

    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= i; ++j)
        for (int mu = 0; mu < 2; ++mu)
          for (int nu = 0; nu < 2; ++nu) {
            const Cochain lhs = face(r, f[i][nu], j, mu);
            const Cochain rhs = face(r, f[j][mu], i + 1, nu);
            ++cubical.instances;
            if (!(lhs.matrix == rhs.matrix))
              cubical.fail(tag + ", i=" + std::to_string(i) + ", j=" +
                           std::to_string(j) + ", mu=" + std::to_string(mu) +
                           ", nu=" + std::to_string(nu));
          }

    for (int i = 1; i <= n; ++i)
      for (int mu = 0; mu < 2; ++mu) {
        const Cochain lhs = face(r, top, i, mu);
        const Cochain rhs = face_last(r, f[i][mu]);
        ++extra_inner.instances;
        if (!(lhs.matrix == rhs.matrix))
          extra_inner.fail(tag + ", i=" + std::to_string(i) + ", mu=" +
                           std::to_string(mu));
      }

    {
      const Cochain lhs = face(r, top, n + 1, 0);
      const ExactMatrix rhs =
          face_last(r, top).matrix + face(r, top, n + 1, 1).matrix;
      ++extra_top.instances;
      if (!(lhs.matrix == rhs)) extra_top.fail(tag);
    }

    {
      const Cochain d2 = differential(r, differential(r, w));
      ++dd.instances;
      if (!d2.matrix.is_zero()) dd.fail(tag);
    }
  }
  return {cubical, extra_inner, extra_top, coder, dd};
}

CohomologyDims cohomology(const Bialg<Rational>& r, int n, long long size_cap) {
  const std::vector<Cochain> cn = coderivation_space(r, n, size_cap);
  CohomologyDims out;
  out.cochains = static_cast<int>(cn.size());
  int rank_here = 0;
  if (!cn.empty()) {
    std::vector<QVec> rows;
    rows.reserve(cn.size());
    for (const Cochain& w : cn) rows.push_back(flatten(differential(r, w)));
    rank_here = static_cast<int>(
        rref(rows, static_cast<int>(rows.front().size())).pivot_cols.size());
  }
  out.cocycles = out.cochains - rank_here;
  int rank_prev = 0;
  if (n >= 2) {
    const std::vector<Cochain> cm = coderivation_space(r, n - 1, size_cap);
    std::vector<QVec> rows;
    rows.reserve(cm.size());
    for (const Cochain& w : cm) rows.push_back(flatten(differential(r, w)));
    if (!rows.empty())
      rank_prev = static_cast<int>(
          rref(rows, static_cast<int>(rows.front().size())).pivot_cols.size());
  }
  out.coboundaries = rank_prev;
  out.cohomology = out.cocycles - out.coboundaries;
  return out;
}

Bialg<HPoly> deformed_by(const Bialg<Rational>& r, const Cochain& mu1) {
  check_tables(r, true);
  check_cochain(r, mu1);
  if (mu1.n != 2)
    throw Error(Error::Code::DimensionMismatch,
                "a product deformation must have degree 2, got " +
                    std::to_string(mu1.n));
  Bialg<HPoly> out = to_hpoly(r, 1);
  const HPoly h = HPoly::hbar(1, 1);
  for (int i = 0; i < r.dim; ++i)
    for (int j = 0; j < r.dim; ++j) {
      const int col = i * r.dim + j;
      for (int row = 0; row < r.dim; ++row) {
        const Rational& x = mu1.matrix.at(row, col);
        if (is_zero(x)) continue;
        const HPoly hx = h * x;
        detail::acc(out.mu[i][j], row, hx);
      }
    }
  return out;
}

std::vector<CheckReport> verify_deformation(const Bialg<Rational>& r,
                                            const Cochain& mu1) {
  return verify_rack_axioms(deformed_by(r, mu1));
}

InfinitesimalDeformation make_infinitesimal(const Bialg<Rational>& r,
                                            const Cochain& mu1) {
  InfinitesimalDeformation out{mu1, deformed_by(r, mu1)};
  for (const CheckReport& rep : verify_rack_axioms(out.bialg))
    if (!rep.pass)
      throw Error(Error::Code::IdentityViolation,
                  "first-order deformation breaks " + rep.name + " at " +
                      rep.counterexample);
  return out;
}

EquivalenceResult equivalent(const Bialg<Rational>& r, const Cochain& mu1,
                             const Cochain& mu1p) {
  check_tables(r, true);
  check_cochain(r, mu1);
  check_cochain(r, mu1p);
  if (mu1.n != 2 || mu1p.n != 2)
    throw Error(Error::Code::DimensionMismatch,
                "deformations must be degree-2 cochains");
  const auto validate = [&](const Cochain& m, const std::string& which) {
    const CheckReport c = is_coderivation(r, m);
    if (!c.pass)
      throw Error(Error::Code::NotCocycle,
                  which + " is not a coderivation along the squared product: " +
                      c.counterexample);
    if (!differential(r, m).matrix.is_zero())
      throw Error(Error::Code::NotCocycle, which + " has nonzero differential");
  };
  validate(mu1, "first deformation");
  validate(mu1p, "second deformation");
  const std::vector<Cochain> c1 = coderivation_space(r, 1);
  const QVec target = flatten(Cochain{2, mu1.matrix - mu1p.matrix});
  ExactMatrix sys(static_cast<int>(target.size()), static_cast<int>(c1.size()));
  for (std::size_t j = 0; j < c1.size(); ++j) {
    const QVec img = flatten(differential(r, c1[j]));
    for (std::size_t row = 0; row < img.size(); ++row)
      if (!is_zero(img[row]))
        sys.set(static_cast<int>(row), static_cast<int>(j), img[row]);
  }
  const std::optional<QVec> x = solve(sys, target);
  if (!x) return {false, zero_cochain(r, 1)};
  EquivalenceResult out{true, zero_cochain(r, 1)};
  for (std::size_t j = 0; j < c1.size(); ++j)
    add_scaled(out.witness.matrix, (*x)[j], c1[j].matrix);
  return out;
}

CheckReport witness_intertwines(const Bialg<Rational>& r, const Cochain& mu1,
                                const Cochain& mu1p, const Cochain& alpha) {
  check_cochain(r, alpha);
  if (alpha.n != 1)
    throw Error(Error::Code::DimensionMismatch,
                "a gauge witness must be a degree-1 cochain");
  const Bialg<HPoly> b1 = deformed_by(r, mu1);
  const Bialg<HPoly> b2 = deformed_by(r, mu1p);
  const HPoly h = HPoly::hbar(1, 1);
  std::vector<SparseVec<HPoly>> phi(r.dim);
  for (int k = 0; k < r.dim; ++k) {
    phi[k] = basis_elt<HPoly>(k);
    for (int row = 0; row < r.dim; ++row) {
      const Rational& x = alpha.matrix.at(row, k);
      if (is_zero(x)) continue;
      const HPoly hx = h * x;
      detail::acc(phi[k], row, hx);
    }
  }
  CheckReport report("gauge-transformation-intertwines-deformations");
  for (int i = 0; i < r.dim; ++i)
    for (int j = 0; j < r.dim; ++j) {
      SparseVec<HPoly> lhs;
      for (const auto& [t, c] : b1.mu[i][j])
        for (const auto& [row, p] : phi[t]) {
          const HPoly v = c * p;
          detail::acc(lhs, row, v);
        }
      const SparseVec<HPoly> rhs = bialg_product(b2, phi[i], phi[j]);
      ++report.instances;
      if (lhs != rhs)
        report.fail("(" + r.labels[i] + ", " + r.labels[j] + "): lhs = " +
                    el_str(b2, lhs) + ", rhs = " + el_str(b2, rhs));
    }
  return report;
}

}  // namespace rackbi
