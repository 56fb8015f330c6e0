#include "rackbi/matrix.hpp"

#include <algorithm>

#include "rackbi/error.hpp"

namespace rackbi {

QVec qvec_zero(int n) { return QVec(n, Rational(0)); }

QVec qvec_unit(int n, int i) {
  QVec v(n, Rational(0));
  v[i] = 1;
  return v;
}

bool qvec_is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& q) { return is_zero(q); });
}

QVec& qvec_add_scaled(QVec& acc, const Rational& c, const QVec& v) {
  if (acc.size() != v.size())
    throw Error(Error::Code::DimensionMismatch, "vector sizes differ");
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
  return acc;
}

std::string qvec_str(const QVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rat_str(v[i]);
  }
  return out + ")";
}

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw Error(Error::Code::IndexOutOfRange, "negative matrix dimension");
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<QVec>& rows, int cols) {
  ExactMatrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw Error(Error::Code::DimensionMismatch, "ragged row list");
    for (int c = 0; c < cols; ++c) m.set(static_cast<int>(r), c, rows[r][c]);
  }
  return m;
}

void ExactMatrix::check_index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw Error(Error::Code::IndexOutOfRange, "matrix index out of range");
}

const Rational& ExactMatrix::at(int r, int c) const {
  check_index(r, c);
  static const Rational kZero(0);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? kZero : it->second;
}

void ExactMatrix::set(int r, int c, const Rational& value) {
  check_index(r, c);
  if (rackbi::is_zero(value))
    entries_.erase({r, c});
  else
    entries_[{r, c}] = value;
}

void ExactMatrix::add_at(int r, int c, const Rational& value) {
  check_index(r, c);
  auto it = entries_.find({r, c});
  if (it == entries_.end()) {
    if (!rackbi::is_zero(value)) entries_.emplace(std::make_pair(r, c), value);
    return;
  }
  it->second += value;
  if (rackbi::is_zero(it->second)) entries_.erase(it);
}

QVec ExactMatrix::apply(const QVec& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw Error(Error::Code::DimensionMismatch, "matrix/vector size mismatch");
  QVec out = qvec_zero(rows_);
  for (const auto& [rc, v] : entries_) out[rc.first] += v * x[rc.second];
  return out;
}

QVec ExactMatrix::row(int r) const {
  if (r < 0 || r >= rows_)
    throw Error(Error::Code::IndexOutOfRange, "row index out of range");
  QVec out = qvec_zero(cols_);
  for (auto it = entries_.lower_bound({r, 0});
       it != entries_.end() && it->first.first == r; ++it)
    out[it->first.second] = it->second;
  return out;
}

QVec ExactMatrix::col(int c) const {
  QVec out = qvec_zero(rows_);
  for (const auto& [rc, v] : entries_)
    if (rc.second == c) out[rc.first] = v;
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw Error(Error::Code::DimensionMismatch, "matrix product shapes");
  ExactMatrix out(rows_, rhs.cols_);
  for (const auto& [rc, v] : entries_) {
    auto [r, k] = rc;
    for (auto it = rhs.entries_.lower_bound({k, 0});
         it != rhs.entries_.end() && it->first.first == k; ++it)
      out.add_at(r, it->first.second, v * it->second);
  }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(Error::Code::DimensionMismatch, "matrix sum shapes");
  ExactMatrix out(*this);
  for (const auto& [rc, v] : rhs.entries_) out.add_at(rc.first, rc.second, v);
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(Error::Code::DimensionMismatch, "matrix difference shapes");
  ExactMatrix out(*this);
  for (const auto& [rc, v] : rhs.entries_) out.add_at(rc.first, rc.second, -v);
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(cols_, rows_);
  for (const auto& [rc, v] : entries_) out.set(rc.second, rc.first, v);
  return out;
}

Echelon rref(std::vector<QVec> rows, int cols) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != cols)
      throw Error(Error::Code::DimensionMismatch, "ragged row list");

  // Scale every row to integer entries so the Bareiss update below performs
  // exact integer divisions only.
  for (auto& r : rows) {
    mpz_class lcm(1);
    for (const auto& q : r)
      if (!is_zero(q))
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    if (lcm != 1)
      for (auto& q : r) q *= Rational(lcm);
  }

  const int n = static_cast<int>(rows.size());
  std::vector<int> pivot_cols;
  Rational prev_pivot(1);
  int lead = 0;
  for (int col = 0; col < cols && lead < n; ++col) {
    // Partial pivoting: largest magnitude below the current lead row,
    // lowest row index on ties.
    int pivot = -1;
    for (int r = lead; r < n; ++r) {
      if (is_zero(rows[r][col])) continue;
      if (pivot < 0 || mpz_cmpabs(rows[r][col].get_num_mpz_t(),
                                  rows[pivot][col].get_num_mpz_t()) > 0)
        pivot = r;
    }
    if (pivot < 0) continue;
    std::swap(rows[lead], rows[pivot]);
    const Rational p = rows[lead][col];
    for (int r = lead + 1; r < n; ++r) {
      const Rational m = rows[r][col];
      for (int c = col; c < cols; ++c)
        rows[r][c] = (rows[r][c] * p - m * rows[lead][c]) / prev_pivot;
    }
    prev_pivot = p;
    pivot_cols.push_back(col);
    ++lead;
  }

  // Normalize pivots to one and clear entries above them.
  Echelon out;
  out.cols = cols;
  out.rows.assign(rows.begin(), rows.begin() + lead);
  out.pivot_cols = pivot_cols;
  for (int r = 0; r < lead; ++r) {
    const Rational inv = Rational(1) / out.rows[r][pivot_cols[r]];
    for (int c = pivot_cols[r]; c < cols; ++c) out.rows[r][c] *= inv;
  }
  for (int r = lead - 1; r >= 0; --r) {
    for (int above = 0; above < r; ++above) {
      const Rational m = out.rows[above][pivot_cols[r]];
      if (is_zero(m)) continue;
      for (int c = pivot_cols[r]; c < cols; ++c)
        out.rows[above][c] -= m * out.rows[r][c];
    }
  }
  return out;
}

Echelon rref(const ExactMatrix& m) {
  std::vector<QVec> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rref(std::move(rows), m.cols());
}

int rank(const ExactMatrix& m) {
  return static_cast<int>(rref(m).pivot_cols.size());
}

std::vector<QVec> kernel_basis(const ExactMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVec v = qvec_zero(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r)
      v[e.pivot_cols[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const ExactMatrix& a, const QVec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw Error(Error::Code::DimensionMismatch, "solve shapes");
  std::vector<QVec> rows;
  rows.reserve(a.rows());
  for (int r = 0; r < a.rows(); ++r) {
    QVec row = a.row(r);
    row.push_back(b[r]);
    rows.push_back(std::move(row));
  }
  Echelon e = rref(std::move(rows), a.cols() + 1);
  for (int c : e.pivot_cols)
    if (c == a.cols()) return std::nullopt;
  QVec x = qvec_zero(a.cols());
  for (std::size_t r = 0; r < e.rows.size(); ++r)
    x[e.pivot_cols[r]] = e.rows[r][a.cols()];
  return x;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  const int n = m.rows();
  if (m.cols() != n) return std::nullopt;
  std::vector<QVec> rows;
  rows.reserve(n);
  for (int r = 0; r < n; ++r) {
    QVec row = m.row(r);
    row.resize(2 * n, Rational(0));
    row[n + r] = 1;
    rows.push_back(std::move(row));
  }
  Echelon e = rref(std::move(rows), 2 * n);
  if (static_cast<int>(e.pivot_cols.size()) != n || e.pivot_cols.back() != n - 1)
    return std::nullopt;
  ExactMatrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.set(r, c, e.rows[r][n + c]);
  return out;
}

}  // namespace rackbi
