#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rackbi/rational.hpp"

namespace rackbi {

using QVec = std::vector<Rational>;

QVec qvec_zero(int n);
QVec qvec_unit(int n, int i);
bool qvec_is_zero(const QVec& v);
QVec& qvec_add_scaled(QVec& acc, const Rational& c, const QVec& v);
std::string qvec_str(const QVec& v);

/// Sparse rational matrix with exact arithmetic. Only nonzero entries are
/// stored; iteration order over entries is deterministic (row-major).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols);
  static ExactMatrix identity(int n);
  static ExactMatrix from_rows(const std::vector<QVec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rational& at(int r, int c) const;
  void set(int r, int c, const Rational& value);
  void add_at(int r, int c, const Rational& value);
  const std::map<std::pair<int, int>, Rational>& entries() const {
    return entries_;
  }

  QVec apply(const QVec& x) const;
  QVec row(int r) const;
  QVec col(int c) const;
  ExactMatrix operator*(const ExactMatrix& rhs) const;
  ExactMatrix operator+(const ExactMatrix& rhs) const;
  ExactMatrix operator-(const ExactMatrix& rhs) const;
  ExactMatrix transpose() const;
  bool is_zero() const { return entries_.empty(); }
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  void check_index(int r, int c) const;

  int rows_ = 0;
  int cols_ = 0;
  std::map<std::pair<int, int>, Rational> entries_;
};

/// Reduced row echelon form. Rows are the nonzero RREF rows; pivot_cols[i]
/// is the pivot column of rows[i], strictly increasing.
struct Echelon {
  int cols = 0;
  std::vector<QVec> rows;
  std::vector<int> pivot_cols;
};

/// Deterministic fraction-free elimination (Bareiss on scaled integer rows,
/// partial pivoting by magnitude with lowest-index tie break), normalized to
/// reduced row echelon form.
Echelon rref(std::vector<QVec> rows, int cols);
Echelon rref(const ExactMatrix& m);

int rank(const ExactMatrix& m);

/// Basis of { x : m x = 0 }, one vector per free column in ascending column
/// order, each with a 1 in its free coordinate. Deterministic.
std::vector<QVec> kernel_basis(const ExactMatrix& m);

/// One solution of A x = b (free coordinates set to zero), or nullopt when
/// the system is inconsistent.
std::optional<QVec> solve(const ExactMatrix& a, const QVec& b);

/// Inverse of a square matrix, nullopt when singular (or not square).
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

}  // namespace rackbi
