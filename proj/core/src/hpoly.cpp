#include "rackbi/hpoly.hpp"

#include <algorithm>

namespace rackbi {

namespace {

std::optional<int> min_trunc(const std::optional<int>& a,
                             const std::optional<int>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

HPoly::HPoly(const Rational& constant) {
  if (!rackbi::is_zero(constant)) coeffs_.push_back(constant);
}

HPoly HPoly::with_truncation(const Rational& constant, int order) {
  HPoly p(constant);
  p.trunc_ = order;
  p.clamp();
  return p;
}

HPoly HPoly::hbar(int power, std::optional<int> truncation) {
  HPoly p;
  p.trunc_ = truncation;
  if (!truncation || power <= *truncation) {
    p.coeffs_.assign(power + 1, Rational(0));
    p.coeffs_.back() = 1;
  }
  return p;
}

Rational HPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[k];
}

int HPoly::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

HPoly HPoly::truncated(int order) const {
  HPoly p(*this);
  p.trunc_ = min_trunc(trunc_, order);
  p.clamp();
  return p;
}

void HPoly::trim() {
  while (!coeffs_.empty() && rackbi::is_zero(coeffs_.back()))
    coeffs_.pop_back();
}

void HPoly::clamp() {
  if (trunc_ && static_cast<int>(coeffs_.size()) > *trunc_ + 1)
    coeffs_.resize(*trunc_ + 1);
  trim();
}

HPoly& HPoly::operator+=(const HPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
    coeffs_[k] += rhs.coeffs_[k];
  trunc_ = min_trunc(trunc_, rhs.trunc_);
  clamp();
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
    coeffs_[k] -= rhs.coeffs_[k];
  trunc_ = min_trunc(trunc_, rhs.trunc_);
  clamp();
  return *this;
}

HPoly& HPoly::operator*=(const HPoly& rhs) {
  std::optional<int> t = min_trunc(trunc_, rhs.trunc_);
  std::vector<Rational> out;
  if (!coeffs_.empty() && !rhs.coeffs_.empty()) {
    out.assign(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        if (t && static_cast<int>(i + j) > *t) continue;
        out[i + j] += coeffs_[i] * rhs.coeffs_[j];
      }
    }
  }
  coeffs_ = std::move(out);
  trunc_ = t;
  clamp();
  return *this;
}

HPoly& HPoly::operator*=(const Rational& rhs) {
  if (rackbi::is_zero(rhs)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

HPoly HPoly::operator-() const {
  HPoly p(*this);
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::string HPoly::str() const {
  if (coeffs_.empty()) return "0/1";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) out += " + ";
    out += rat_str(coeffs_[k]);
    if (k == 1) out += "·ħ";
    if (k >= 2) out += "·ħ^" + std::to_string(k);
  }
  return out;
}

}  // namespace rackbi
