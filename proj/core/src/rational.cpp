#include "rackbi/rational.hpp"

#include <cctype>

#include "rackbi/error.hpp"

namespace rackbi {

namespace {

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational rat_parse(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer_text(num) || !is_integer_text(den)) {
    throw Error(Error::Code::ParseError, "malformed rational '" + text + "'");
  }
  mpq_class q;
  if (q.set_str(num + "/" + den, 10) != 0) {
    throw Error(Error::Code::ParseError, "malformed rational '" + text + "'");
  }
  if (sgn(q.get_den()) == 0) {
    throw Error(Error::Code::ParseError,
                "zero denominator in rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpz_class factorial(int n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return out;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(out);
}

}  // namespace rackbi
