// Independent polynomial oracles: elementary symmetric polynomials by
// subset sums, Leibniz determinants, and expansion in the e-basis.

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qweb/polyring.hpp"

namespace qweb::testing {

inline std::vector<int> range(int from, int to) {
  std::vector<int> v;
  for (int i = from; i <= to; ++i) v.push_back(i);
  return v;
}

// e_r by summing over r-subsets; independent of the library's recursion.
inline MultiPoly esym_oracle(int r, const std::vector<int>& vars, int nvars) {
  MultiPoly acc(nvars);
  if (r < 0 || r > static_cast<int>(vars.size())) return acc;
  std::vector<int> pick(vars.size(), 0);
  std::fill(pick.end() - r, pick.end(), 1);
  do {
    MultiPoly m = MultiPoly::constant(Scalar(1), nvars);
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (pick[i]) m = m * MultiPoly::var(vars[i], nvars);
    acc += m;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return acc;
}

inline MultiPoly esym_mu_oracle(const std::vector<int>& mu, const std::vector<int>& vars, int nvars) {
  MultiPoly acc = MultiPoly::constant(Scalar(1), nvars);
  for (int p : mu) acc = acc * esym_oracle(p, vars, nvars);
  return acc;
}

// Leibniz determinant.
inline MultiPoly det_oracle(const std::vector<std::vector<MultiPoly>>& m, int nvars) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly acc(nvars);
  if (n == 0) return MultiPoly::constant(Scalar(1), nvars);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    MultiPoly t = MultiPoly::constant(Scalar(inv % 2 ? -1 : 1), nvars);
    for (int i = 0; i < n; ++i) t = t * m[i][perm[i]];
    acc += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

inline int exp_of(const Exponents& e, int var) {
  return static_cast<std::size_t>(var - 1) < e.size() ? e[static_cast<std::size_t>(var - 1)] : 0;
}

// Expansion of a symmetric polynomial in the variables `vars` in the basis
// e_mu (mu with parts <= |vars|), by peeling off lex-leading monomials.
inline std::map<Partition, Scalar> e_expand(MultiPoly p, const std::vector<int>& vars, int nvars) {
  std::map<Partition, Scalar> out;
  while (!p.is_zero()) {
    const Exponents* lead = nullptr;
    std::vector<int> best;
    for (const auto& [e, c] : p.terms()) {
      std::vector<int> r;
      for (int v : vars) r.push_back(exp_of(e, v));
      if (!lead || best < r) {
        lead = &e;
        best = r;
      }
    }
    Scalar c = p.coeff(*lead);
    // x^alpha leads e_{alpha'}.
    Partition conj;
    for (int level = 1; level <= (best.empty() ? 0 : best.front()); ++level) {
      int cnt = 0;
      for (int x : best) cnt += x >= level;
      conj.push_back(cnt);
    }
    if (!std::is_sorted(best.rbegin(), best.rend())) throw std::logic_error("e_expand: input is not symmetric");
    out[conj] += c;
    p -= esym_mu_oracle(conj, vars, nvars) * c;
  }
  return out;
}

}  // namespace qweb::testing
