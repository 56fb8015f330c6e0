#include "rackbi/rack_bialgebra.hpp"

namespace rackbi {

void CheckReport::fail(const std::string& witness) {
  if (pass) {
    pass = false;
    counterexample = witness;
  }
}

bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

Bialg<HPoly> to_hpoly(const Bialg<Rational>& B, std::optional<int> trunc) {
  const auto lift = [&](const Rational& v) {
    return trunc ? HPoly::with_truncation(v, *trunc) : HPoly(v);
  };
  Bialg<HPoly> out;
  out.dim = B.dim;
  out.labels = B.labels;
  out.delta.resize(B.delta.size());
  for (std::size_t i = 0; i < B.delta.size(); ++i)
    for (const auto& [pq, c] : B.delta[i]) out.delta[i].emplace(pq, lift(c));
  out.eps.reserve(B.eps.size());
  for (const auto& c : B.eps) out.eps.push_back(lift(c));
  for (const auto& [t, c] : B.one) out.one.emplace(t, lift(c));
  out.mu.resize(B.mu.size());
  for (std::size_t i = 0; i < B.mu.size(); ++i) {
    out.mu[i].resize(B.mu[i].size());
    for (std::size_t j = 0; j < B.mu[i].size(); ++j)
      for (const auto& [t, c] : B.mu[i][j]) out.mu[i][j].emplace(t, lift(c));
  }
  return out;
}

}  // namespace rackbi
