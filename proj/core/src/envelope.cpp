#include "rackbi/envelope.hpp"

#include <algorithm>

namespace rackbi {

namespace {

void acc(std::map<PBWMonomial, Rational>& terms, const PBWMonomial& w,
         const Rational& v) {
  if (is_zero(v)) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, v);
    return;
  }
  it->second += v;
  if (is_zero(it->second)) terms.erase(it);
}

void check_indices(const LieAlgebra& g, const std::vector<int>& w) {
  for (int i : w)
    if (i < 0 || i >= g.dim)
      throw Error(Error::Code::AlgebraMismatch,
                  "word index outside the algebra");
}

}  // namespace

UEAElt uea_zero() { return {}; }

UEAElt uea_one() {
  UEAElt u;
  u.terms.emplace(PBWMonomial{}, Rational(1));
  return u;
}

UEAElt uea_gen(int i) {
  if (i < 0) throw Error(Error::Code::IndexOutOfRange, "generator index");
  UEAElt u;
  u.terms.emplace(PBWMonomial{i}, Rational(1));
  return u;
}

UEAElt uea_term(const PBWMonomial& w, const Rational& coeff) {
  if (!std::is_sorted(w.begin(), w.end()))
    throw Error(Error::Code::ParseError, "word is not in normal form");
  UEAElt u;
  acc(u.terms, w, coeff);
  return u;
}

int filtration(const UEAElt& u) {
  int f = -1;
  for (const auto& [w, v] : u.terms)
    f = std::max(f, static_cast<int>(w.size()));
  return f;
}

std::vector<PBWMonomial> pbw_words(int dim, int max_filtration) {
  std::vector<PBWMonomial> out{PBWMonomial{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_filtration; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t t = level_begin; t < level_end; ++t)
      for (int i = out[t].empty() ? 0 : out[t].back(); i < dim; ++i) {
        PBWMonomial w = out[t];
        w.push_back(i);
        out.push_back(std::move(w));
      }
    level_begin = level_end;
  }
  return out;
}

UEAElt& uea_add(UEAElt& a, const UEAElt& b) {
  for (const auto& [w, v] : b.terms) acc(a.terms, w, v);
  return a;
}

UEAElt& uea_scale(UEAElt& a, const Rational& s) {
  if (is_zero(s)) {
    a.terms.clear();
    return a;
  }
  for (auto& [w, v] : a.terms) v *= s;
  return a;
}

UEAElt uea_sub(UEAElt a, const UEAElt& b) {
  for (const auto& [w, v] : b.terms) acc(a.terms, w, -v);
  return a;
}

UEAElt uea_normalize(const LieAlgebra& g,
                     std::map<std::vector<int>, Rational> words) {
  UEAElt out;
  while (!words.empty()) {
    auto node = words.extract(words.begin());
    const std::vector<int>& w = node.key();
    const Rational& c = node.mapped();
    if (is_zero(c)) continue;
    check_indices(g, w);
    std::size_t t = 0;
    while (t + 1 < w.size() && w[t] <= w[t + 1]) ++t;
    if (t + 1 >= w.size()) {
      acc(out.terms, w, c);
      continue;
    }
    // x_a x_b = x_b x_a + [x_a, x_b] at the leftmost descent.
    std::vector<int> swapped = w;
    std::swap(swapped[t], swapped[t + 1]);
    auto it = words.find(swapped);
    if (it == words.end())
      words.emplace(std::move(swapped), c);
    else
      it->second += c;
    for (int k = 0; k < g.dim; ++k) {
      const Rational& s = g.structure(w[t], w[t + 1], k);
      if (is_zero(s)) continue;
      std::vector<int> contracted;
      contracted.reserve(w.size() - 1);
      contracted.insert(contracted.end(), w.begin(), w.begin() + t);
      contracted.push_back(k);
      contracted.insert(contracted.end(), w.begin() + t + 2, w.end());
      auto jt = words.find(contracted);
      if (jt == words.end())
        words.emplace(std::move(contracted), c * s);
      else
        jt->second += c * s;
    }
  }
  return out;
}

UEAElt uea_product(const LieAlgebra& g, const UEAElt& a, const UEAElt& b) {
  std::map<std::vector<int>, Rational> words;
  for (const auto& [wa, va] : a.terms) {
    for (const auto& [wb, vb] : b.terms) {
      std::vector<int> w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      auto it = words.find(w);
      if (it == words.end())
        words.emplace(std::move(w), va * vb);
      else
        it->second += va * vb;
    }
  }
  return uea_normalize(g, std::move(words));
}

UEATensor uea_coproduct(const UEAElt& u) {
  UEATensor out;
  for (const auto& [w, v] : u.terms) {
    for (const auto& split : monomial_splits(w)) {
      auto key = std::make_pair(split.left, split.right);
      auto it = out.find(key);
      Rational add = v * split.mult;
      if (it == out.end()) {
        if (!is_zero(add)) out.emplace(std::move(key), std::move(add));
      } else {
        it->second += add;
        if (is_zero(it->second)) out.erase(it);
      }
    }
  }
  return out;
}

Rational uea_counit(const UEAElt& u) {
  auto it = u.terms.find(PBWMonomial{});
  return it == u.terms.end() ? Rational(0) : it->second;
}

UEAElt uea_antipode(const LieAlgebra& g, const UEAElt& u) {
  std::map<std::vector<int>, Rational> words;
  for (const auto& [w, v] : u.terms) {
    std::vector<int> rev(w.rbegin(), w.rend());
    Rational sign = (w.size() % 2 == 0) ? v : -v;
    auto it = words.find(rev);
    if (it == words.end())
      words.emplace(std::move(rev), sign);
    else
      it->second += sign;
  }
  return uea_normalize(g, std::move(words));
}

UEAElt hopf_adjoint(const LieAlgebra& g, const UEAElt& u, const UEAElt& v) {
  UEAElt out;
  for (const auto& [pair, c] : uea_coproduct(u)) {
    UEAElt left = uea_term(pair.first, c);
    UEAElt right = uea_antipode(g, uea_term(pair.second, Rational(1)));
    UEAElt prod = uea_product(g, uea_product(g, left, v), right);
    uea_add(out, prod);
  }
  return out;
}

UEAElt symmetrization(const LieAlgebra& g, const SymElt<Rational>& a) {
  if (a.dim != g.dim)
    throw Error(Error::Code::AlgebraMismatch,
                "element does not live over the algebra's generators");
  std::map<std::vector<int>, Rational> words;
  for (const auto& [mono, v] : a.terms) {
    // Weight per distinct ordering: (prod of multiplicities!) / k!.
    Rational weight(factorial(static_cast<int>(mono.size())));
    weight = Rational(1) / weight;
    std::size_t t = 0;
    while (t < mono.size()) {
      std::size_t run = t;
      while (run < mono.size() && mono[run] == mono[t]) ++run;
      weight *= Rational(factorial(static_cast<int>(run - t)));
      t = run;
    }
    std::vector<int> perm = mono;
    do {
      auto it = words.find(perm);
      if (it == words.end())
        words.emplace(perm, v * weight);
      else
        it->second += v * weight;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return uea_normalize(g, std::move(words));
}

UEAElt uea_map(const LieAlgebra& target, const ExactMatrix& f,
               const UEAElt& u) {
  std::map<std::vector<int>, Rational> words;
  for (const auto& [w, v] : u.terms) {
    // Expand the product of generator images distributively.
    std::map<std::vector<int>, Rational> partial;
    partial.emplace(std::vector<int>{}, v);
    for (int idx : w) {
      if (idx >= f.cols())
        throw Error(Error::Code::AlgebraMismatch, "word index outside source");
      std::map<std::vector<int>, Rational> next;
      for (const auto& [pw, pv] : partial) {
        for (int r = 0; r < f.rows(); ++r) {
          const Rational& c = f.at(r, idx);
          if (is_zero(c)) continue;
          std::vector<int> nw = pw;
          nw.push_back(r);
          auto it = next.find(nw);
          if (it == next.end())
            next.emplace(std::move(nw), pv * c);
          else
            it->second += pv * c;
        }
      }
      partial = std::move(next);
    }
    for (const auto& [pw, pv] : partial) {
      auto it = words.find(pw);
      if (it == words.end())
        words.emplace(pw, pv);
      else
        it->second += pv;
    }
  }
  return uea_normalize(target, std::move(words));
}

UEAElt convolve(const LieAlgebra& g, const UEAEndo& f, const UEAEndo& h,
                const UEAElt& u) {
  UEAElt out;
  for (const auto& [pair, c] : uea_coproduct(u)) {
    UEAElt prod = uea_product(g, f(uea_term(pair.first, Rational(1))),
                              h(uea_term(pair.second, Rational(1))));
    uea_scale(prod, c);
    uea_add(out, prod);
  }
  return out;
}

UEAElt convolution_series(const LieAlgebra& g,
                          const std::function<Rational(int)>& coeff,
                          const UEAEndo& f, const UEAElt& u) {
  if (!f(uea_one()).is_zero())
    throw Error(Error::Code::NonTerminating,
                "series endomorphism does not kill the unit");
  const int bound = std::max(filtration(u), 0);
  std::map<std::pair<int, PBWMonomial>, UEAElt> memo;
  auto power = [&](auto&& self, int m, const PBWMonomial& w) -> UEAElt {
    if (m == 0)
      return w.empty() ? uea_one() : uea_zero();
    if (m == 1) return f(uea_term(w, Rational(1)));
    auto key = std::make_pair(m, w);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    UEAElt out;
    for (const auto& [pair, c] : uea_coproduct(uea_term(w, Rational(1)))) {
      UEAElt prod = uea_product(g, f(uea_term(pair.first, Rational(1))),
                                self(self, m - 1, pair.second));
      uea_scale(prod, c);
      uea_add(out, prod);
    }
    memo.emplace(std::move(key), out);
    return out;
  };
  UEAElt out;
  for (int m = 0; m <= bound; ++m) {
    const Rational cm = coeff(m);
    if (is_zero(cm)) continue;
    for (const auto& [w, v] : u.terms) {
      UEAElt part = power(power, m, w);
      uea_scale(part, cm * v);
      uea_add(out, part);
    }
  }
  return out;
}

UEAElt eulerian(const LieAlgebra& g, const UEAElt& u) {
  UEAEndo raise = [](const UEAElt& x) {
    UEAElt out = x;
    acc(out.terms, PBWMonomial{}, -uea_counit(x));
    return out;
  };
  auto log_coeff = [](int m) {
    if (m == 0) return Rational(0);
    Rational c(1, static_cast<unsigned long>(m));
    return (m % 2 == 0) ? -c : c;
  };
  return convolution_series(g, log_coeff, raise, u);
}

std::string uea_str(const UEAElt& u, const std::vector<std::string>& names) {
  if (u.terms.empty()) return "0";
  std::string out;
  for (const auto& [w, v] : u.terms) {
    if (!out.empty()) out += " + ";
    out += "(" + rat_str(v) + ")";
    for (int i : w) out += "·" + names.at(i);
  }
  return out;
}

}  // namespace rackbi
