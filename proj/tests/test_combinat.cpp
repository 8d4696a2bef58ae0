#include <algorithm>
#include <functional>
#include <set>

#include "catch_amalgamated.hpp"
#include "qweb/combinat.hpp"

using namespace qweb;

namespace {

// Partition numbers by Euler's pentagonal recurrence.
long partition_count(int n) {
  std::vector<long> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      long sign = (k % 2) ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) s += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = s;
  }
  return p[static_cast<std::size_t>(n)];
}

// Number of non-negative matrices with given margins, by direct recursion
// over cells.
long matrix_count(const Composition& rows, const Composition& cols) {
  std::vector<int> r(rows), c(cols);
  std::function<long(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) -> long {
    if (i == r.size()) return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; }) ? 1 : 0;
    if (j == c.size()) return r[i] == 0 ? go(i + 1, 0) : 0;
    long total = 0;
    for (int v = 0; v <= std::min(r[i], c[j]); ++v) {
      r[i] -= v;
      c[j] -= v;
      total += go(i, j + 1);
      r[i] += v;
      c[j] += v;
    }
    return total;
  };
  return go(0, 0);
}

}  // namespace

TEST_CASE("partition enumeration counts") {
  for (int n = 0; n <= 12; ++n) {
    auto ps = partitions_of(n);
    CHECK(static_cast<long>(ps.size()) == partition_count(n));
    std::set<Partition> uniq(ps.begin(), ps.end());
    CHECK(uniq.size() == ps.size());
    for (const auto& p : ps) {
      CHECK(is_partition(p));
      CHECK(weight(p) == n);
    }
  }
  CHECK(partitions_of(5, 2).size() == 3);     // 2+2+1, 2+1+1+1, 1^5
  CHECK(partitions_of(5, -1, 2).size() == 3); // 5, 4+1, 3+2
}

TEST_CASE("strict partitions and compositions") {
  // SPar_a including the empty partition: all subsets of {1..a}.
  for (int a = 0; a <= 6; ++a) CHECK(strict_partitions_bounded(a).size() == (1u << a));
  for (int a = 1; a <= 6; ++a)
    for (int k = 0; k <= a; ++k) {
      auto s = strict_partitions_exact_len(a, k);
      long c = 1;
      for (int i = 0; i < k; ++i) c = c * (a - i) / (i + 1);
      CHECK(static_cast<long>(s.size()) == c);
      for (const auto& p : s) CHECK(is_strict_partition(p));
    }
  for (int n = 1; n <= 8; ++n) CHECK(compositions_of(n).size() == (1u << (n - 1)));
  CHECK(strip_zeros({2, 0, 1, 0}) == Composition{2, 1});
}

TEST_CASE("matrices with prescribed margins") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : compositions_of(n))
      for (const auto& mu : compositions_of(n)) {
        auto ms = enumerate_matrices(lam, mu);
        CHECK(static_cast<long>(ms.size()) == matrix_count(lam, mu));
        for (const auto& m : ms) {
          for (std::size_t i = 0; i < lam.size(); ++i) {
            int s = 0;
            for (int x : m[i]) s += x;
            CHECK(s == lam[i]);
          }
        }
      }
  CHECK(enumerate_matrices({2}, {1}).empty());
}

TEST_CASE("dominance is a partial order on partitions of n") {
  auto ps = partitions_of(7);
  for (const auto& a : ps) {
    CHECK(dominance_leq(a, a));
    for (const auto& b : ps) {
      if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
      for (const auto& c : ps)
        if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
    }
  }
  CHECK(dominance_lt({2, 1, 1}, {2, 2}));
  CHECK_FALSE(dominance_leq({3, 1, 1, 1}, {2, 2, 2}));
  CHECK_FALSE(dominance_leq({2, 2, 2}, {3, 1, 1, 1}));
  CHECK_THROWS_AS(dominance_leq({2}, {1}), std::invalid_argument);
}

TEST_CASE("union respects dominance") {
  // lambda >= nu and mu >= pi imply lambda cup mu >= nu cup pi.
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m)
      for (const auto& l : partitions_of(n))
        for (const auto& nu : partitions_of(n))
          for (const auto& mu : partitions_of(m))
            for (const auto& pi : partitions_of(m))
              if (dominance_leq(nu, l) && dominance_leq(pi, mu))
                CHECK(dominance_leq(union_of(nu, pi), union_of(l, mu)));
}

TEST_CASE("raising operators preserve weight and raise dominance") {
  for (int k = 1; k <= 4; ++k) {
    auto subsets = raising_subsets(k);
    CHECK(subsets.size() == (1u << (k * (k - 1) / 2)));
    std::vector<int> v(static_cast<std::size_t>(k), 3);
    for (const auto& R : subsets) {
      auto w = apply_raising(R, v);
      CHECK(weight(w) == weight(v));
      if (!R.empty()) CHECK(dominance_lt(v, w));
    }
  }
  CHECK(apply_raising({{1, 2}}, {2, 2}) == std::vector<int>{3, 1});
}

TEST_CASE("bar, tilde and rho") {
  CHECK(bar_partition({4, 2, 1}) == std::vector<int>{3, 1, 0});
  CHECK(rho(3) == std::vector<int>{2, 1, 0});
  CHECK(tilde_partition({4, 2, 1}) == std::vector<int>{1, 0, 0});
  CHECK(index_box(1, {2, 1}).size() == 4);
  CHECK(index_box(2, {3, 1}).size() == 6);
}

TEST_CASE("the gamma packet sits inside mu") {
  for (int a = 1; a <= 4; ++a)
    for (int k = 1; k <= 2 && k <= a; ++k)
      for (int d = 0; d <= 5; ++d)
        for (const auto& p : pairs_C(a, k, d)) {
          auto g = gamma_packet(p.lambda, p.mu);
          REQUIRE(g.size() <= p.mu.size());
          for (std::size_t i = 0; i < g.size(); ++i) CHECK(g[i] <= p.mu[i]);
          std::vector<int> diff(p.mu);
          for (std::size_t i = 0; i < g.size(); ++i) diff[i] -= g[i];
          CHECK(is_partition(sort_desc(diff)));
          CHECK(std::is_sorted(diff.rbegin(), diff.rend()));  // mu - gamma is a partition as listed
        }
}

TEST_CASE("pairs C_{k,d} and their order") {
  // |C_{1,d}| for a = 2: lambda in {(1),(2)}, bar lambda in {0,1}.
  CHECK(pairs_C(2, 1, 0).size() == 1);
  CHECK(pairs_C(2, 1, 1).size() == 2);  // ((1),(1)), ((2),())
  for (int d = 0; d <= 4; ++d) {
    auto ps = pairs_C(3, 2, d);
    for (const auto& p : ps) {
      CHECK(p.d() == d);
      CHECK_FALSE(pair_lt(p, p));
      for (const auto& q : ps)
        if (pair_lt(p, q)) CHECK_FALSE(pair_lt(q, p));
    }
  }
  CHECK_THROWS_AS(pair_lt({{2}, {}}, {{2, 1}, {}}), std::invalid_argument);
}

TEST_CASE("sub-multiset test") {
  CHECK(is_sub_multiset({1, 0}, {2, 1, 0}));
  CHECK_FALSE(is_sub_multiset({1, 1}, {2, 1, 0}));
  CHECK(is_sub_multiset({}, {3}));
}
