// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.

#include "qweb/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace qweb {

int weight(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool is_partition(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0) return false;
    if (i + 1 < v.size() && v[i] < v[i + 1]) return false;
  }
  return true;
}

bool is_strict_partition(const std::vector<int>& v) {
  if (!is_partition(v)) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1]) return false;
  return true;
}

bool is_strict_composition(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x > 0; });
}

Composition strip_zeros(const Composition& c) {
  Composition out;
  for (int x : c)
    if (x != 0) out.push_back(x);
  return out;
}

std::vector<int> bar_partition(const Partition& lambda) {
  std::vector<int> out(lambda);
  for (int& x : out) --x;
  return out;
}

std::vector<int> rho(int k) {
  std::vector<int> r(static_cast<std::size_t>(std::max(k, 0)));
  for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] = k - 1 - i;
  return r;
}

std::vector<int> tilde_partition(const Partition& lambda) {
  auto b = bar_partition(lambda);
  auto r = rho(static_cast<int>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i) b[i] -= r[i];
  return b;
}

bool dominance_leq(const std::vector<int>& alpha, const std::vector<int>& beta) {
  if (weight(alpha) != weight(beta)) throw std::invalid_argument("incomparable weights");
  auto a = sort_desc_padded(alpha), b = sort_desc_padded(beta);
  std::size_t n = std::max(a.size(), b.size());
  long sa = 0, sb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

bool dominance_lt(const std::vector<int>& alpha, const std::vector<int>& beta) {
  return dominance_leq(alpha, beta) && sort_desc(alpha) != sort_desc(beta);
}

Partition sort_desc(const std::vector<int>& v) {
  Partition out;
  for (int x : v) {
    if (x < 0) throw std::invalid_argument("negative entry in sort_desc");
    if (x > 0) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<int> sort_desc_padded(const std::vector<int>& v) {
  std::vector<int> out(v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Partition union_of(const Partition& a, const Partition& b) {
  std::vector<int> all(a);
  all.insert(all.end(), b.begin(), b.end());
  return sort_desc(all);
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<int> apply_raising(const RaisingSpec& spec, std::vector<int> v) {
  for (auto [i, j] : spec) {
    if (i < 1 || j < 1 || i >= j || static_cast<std::size_t>(j) > v.size())
      throw std::out_of_range("raising operator index out of range");
    ++v[static_cast<std::size_t>(i - 1)];
    --v[static_cast<std::size_t>(j - 1)];
  }
  return v;
}

std::vector<RaisingSpec> raising_subsets(int k) {
  RaisingSpec pairs;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) pairs.emplace_back(i, j);
  std::vector<RaisingSpec> out;
  const std::size_t n = pairs.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RaisingSpec s;
    for (std::size_t b = 0; b < n; ++b)
      if (mask >> b & 1) s.push_back(pairs[b]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Partition> partitions_of(int n, int max_part, int max_len) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (max_part < 0) max_part = n;
  if (max_len < 0) max_len = n;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

std::vector<Partition> partitions_bounded(int max_part, int max_weight) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto ps = partitions_of(w, max_part);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Partition> strict_partitions_bounded(int max_part) {
  // All subsets of {1..max_part}, written decreasingly, ordered by length
  // then reverse lex.
  std::vector<Partition> out;
  for (int k = 0; k <= max_part; ++k) {
    auto s = strict_partitions_exact_len(max_part, k);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

std::vector<Partition> strict_partitions_exact_len(int max_part, int k) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int)> rec = [&](int cap) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    int need = k - static_cast<int>(cur.size());
    for (int p = cap; p >= need; --p) {
      cur.push_back(p);
      rec(p - 1);
      cur.pop_back();
    }
  };
  if (k >= 0) rec(max_part);
  return out;
}

std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = left; p >= 1; --p) {
      cur.push_back(p);
      rec(left - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<IntMatrix> enumerate_matrices(const Composition& lambda, const Composition& mu) {
  std::vector<IntMatrix> out;
  if (weight(lambda) != weight(mu)) return out;
  for (int x : lambda)
    if (x < 0) return out;
  for (int x : mu)
    if (x < 0) return out;
  const std::size_t r = lambda.size(), c = mu.size();
  IntMatrix m(r, std::vector<int>(c, 0));
  std::vector<int> row_left(lambda), col_left(mu);
  std::function<void(std::size_t)> rec = [&](std::size_t cell) {
    if (cell == r * c) {
      out.push_back(m);
      return;
    }
    std::size_t i = cell / c, j = cell % c;
    int hi = std::min(row_left[i], col_left[j]);
    int lo = 0;
    if (j + 1 == c) lo = row_left[i];  // last column must exhaust the row
    if (i + 1 == r) lo = std::max(lo, col_left[j]);
    if (lo > hi) return;
    for (int v = hi; v >= lo; --v) {
      m[i][j] = v;
      row_left[i] -= v;
      col_left[j] -= v;
      rec(cell + 1);
      row_left[i] += v;
      col_left[j] += v;
    }
    m[i][j] = 0;
  };
  if (r == 0 || c == 0) {
    if (weight(lambda) == 0) out.push_back(IntMatrix(r, std::vector<int>(c, 0)));
    return out;
  }
  rec(0);
  return out;
}

std::vector<std::vector<int>> index_box(int k, const Partition& mu) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(mu.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == mu.size()) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= std::min(k, mu[j]); ++v) {
      cur[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

int PairIndex::d() const { return weight(bar_partition(lambda)) + weight(mu); }

std::vector<PairIndex> pairs_C(int a, int k, int d) {
  std::vector<PairIndex> out;
  for (const auto& lam : strict_partitions_exact_len(a, k)) {
    int rest = d - weight(bar_partition(lam));
    if (rest < 0) continue;
    for (const auto& mu : partitions_of(rest, a)) out.push_back({lam, mu});
  }
  return out;
}

Partition gamma_packet(const Partition& lambda, const Partition& mu) {
  if (!is_strict_partition(lambda)) throw std::invalid_argument("lambda must be strict");
  const int k = static_cast<int>(lambda.size());
  auto lb = bar_partition(lambda);
  // bar_0 = +inf, bar_{k+1} = -1
  auto bar = [&](int i) -> long {
    if (i == 0) return 1L << 40;
    if (i == k + 1) return -1;
    return lb[static_cast<std::size_t>(i - 1)];
  };
  std::vector<int> g;
  for (int i = 0; i <= k; ++i) {
    for (int m : mu)
      if (bar(i + 1) < m && m <= bar(i)) g.push_back(k - i);
  }
  return sort_desc(g);
}

namespace {

// gamma padded to the length of mu and aligned with it.
std::vector<int> gamma_padded(const Partition& lambda, const Partition& mu) {
  auto g = gamma_packet(lambda, mu);
  g.resize(mu.size(), 0);
  return g;
}

}  // namespace

std::vector<int> nu_profile(const Partition& lambda, const Partition& mu) {
  auto g = gamma_padded(lambda, mu);
  std::vector<int> nu = tilde_partition(lambda);
  for (std::size_t j = 0; j < mu.size(); ++j) nu.push_back(mu[j] - g[j]);
  return sort_desc_padded(nu);
}

bool pair_lt(const PairIndex& p, const PairIndex& q) {
  if (p.lambda.size() != q.lambda.size() || p.d() != q.d())
    throw std::invalid_argument("pairs from different C_{k,d}");
  auto up = union_of(sort_desc(bar_partition(p.lambda)), p.mu);
  auto uq = union_of(sort_desc(bar_partition(q.lambda)), q.mu);
  if (up != uq) return dominance_leq(up, uq);
  return lex_less(p.lambda, q.lambda);
}

bool is_sub_multiset(const std::vector<int>& sub, const std::vector<int>& whole) {
  auto a = sort_desc_padded(sub), b = sort_desc_padded(whole);
  std::size_t j = 0;
  for (int x : a) {
    while (j < b.size() && b[j] > x) ++j;
    if (j == b.size() || b[j] != x) return false;
    ++j;
  }
  return true;
}

int VGraph::index_of(const Partition& alpha) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == alpha) return static_cast<int>(i);
  return -1;
}

Partition VGraph::beta(const Partition& alpha) const {
  std::vector<int> rest = nu;  // sorted decreasing
  for (int x : tilde_partition(alpha)) {
    auto it = std::find(rest.begin(), rest.end(), x);
    if (it == rest.end()) throw std::invalid_argument("alpha not in V_{lambda,mu}");
    rest.erase(it);
  }
  auto g = gamma_packet(lambda, mu);
  g.resize(rest.size(), 0);
  for (std::size_t i = 0; i < rest.size(); ++i) rest[i] += g[i];
  return sort_desc(rest);
}

bool VGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<char> seen(vertices.size(), 0);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
  }
  return count == vertices.size();
}

VGraph v_graph(const Partition& lambda, const Partition& mu, int a) {
  VGraph g;
  g.lambda = lambda;
  g.mu = mu;
  g.gamma = gamma_packet(lambda, mu);
  g.nu = nu_profile(lambda, mu);
  const int k = static_cast<int>(lambda.size());
  for (const auto& alpha : strict_partitions_exact_len(a, k))
    if (is_sub_multiset(tilde_partition(alpha), g.nu)) g.vertices.push_back(alpha);
  g.adj.assign(g.vertices.size(), {});
  auto no_value_between = [&](int x, int y) {
    int lo = std::min(x, y), hi = std::max(x, y);
    return std::none_of(g.nu.begin(), g.nu.end(), [&](int v) { return lo < v && v < hi; });
  };
  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    auto tu = tilde_partition(g.vertices[u]);
    for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
      auto tv = tilde_partition(g.vertices[v]);
      int diff = 0, at = -1;
      for (int i = 0; i < k; ++i)
        if (tu[static_cast<std::size_t>(i)] != tv[static_cast<std::size_t>(i)]) {
          ++diff;
          at = i;
        }
      if (diff != 1) continue;
      if (!no_value_between(tu[static_cast<std::size_t>(at)], tv[static_cast<std::size_t>(at)]))
        continue;
      g.adj[u].push_back(v);
      g.adj[v].push_back(u);
    }
  }
  return g;
}

}  // namespace qweb
