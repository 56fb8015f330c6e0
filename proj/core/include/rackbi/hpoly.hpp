#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rackbi/rational.hpp"

namespace rackbi {

/// Polynomial in the formal deformation parameter h with exact rational
/// coefficients, optionally truncated at a fixed order.
///
/// A value with truncation_order m represents a class mod h^{m+1}: every
/// arithmetic operation keeps only coefficients of h^0..h^m, and combining
/// two truncated values keeps the smaller order (the coarser precision).
/// Untruncated values behave as honest polynomials. Truncation order 1
/// gives dual numbers, which is how "equal mod h^2" statements are checked.
class HPoly {
 public:
  HPoly() = default;
  HPoly(const Rational& constant);  // NOLINT: implicit by design
  HPoly(int constant) : HPoly(Rational(constant)) {}

  static HPoly with_truncation(const Rational& constant, int order);
  /// h^power, optionally truncated; zero if power exceeds the truncation.
  static HPoly hbar(int power = 1,
                    std::optional<int> truncation = std::nullopt);

  /// Coefficient of h^k (zero beyond the stored degree).
  Rational coeff(int k) const;
  /// Degree of the highest nonzero coefficient, -1 for the zero value.
  int degree() const;
  std::optional<int> truncation() const { return trunc_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Same value reinterpreted mod h^{order+1}.
  HPoly truncated(int order) const;

  HPoly& operator+=(const HPoly& rhs);
  HPoly& operator-=(const HPoly& rhs);
  HPoly& operator*=(const HPoly& rhs);
  HPoly& operator*=(const Rational& rhs);
  HPoly operator-() const;

  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(HPoly a, const HPoly& b) { return a *= b; }
  friend HPoly operator*(HPoly a, const Rational& b) { return a *= b; }
  friend HPoly operator*(const Rational& a, HPoly b) { return b *= a; }

  /// Compares stored coefficients; truncation metadata does not participate.
  friend bool operator==(const HPoly& a, const HPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// "p/q" for constants, then "p/q + p/q·ħ + p/q·ħ^2 + ...", keeping
  /// interior zero coefficients so the h-degree is visible.
  std::string str() const;

 private:
  void trim();
  void clamp();

  std::vector<Rational> coeffs_;  // coeffs_[k] multiplies h^k, no trailing 0s
  std::optional<int> trunc_;
};

inline bool is_zero(const HPoly& p) { return p.is_zero(); }

}  // namespace rackbi
