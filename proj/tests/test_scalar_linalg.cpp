#include <random>

#include "catch_amalgamated.hpp"
#include "qweb/linalg.hpp"
#include "qweb/scalar.hpp"

using namespace qweb;

TEST_CASE("scalar string form round-trips") {
  for (const char* s : {"0", "1", "-3/2", "0 + 1 i", "1/2 + -1/3 i", "7 + 2 i"}) {
    Scalar x = Scalar::parse(s);
    CHECK(Scalar::parse(x.str()) == x);
  }
  CHECK(Scalar::frac(6, 4).str() == "3/2");
  CHECK(Scalar::frac(-1, 2).str() == "-1/2");
  CHECK((Scalar::i() * Scalar::i()) == Scalar(-1));
}

TEST_CASE("scalar field axioms on random Gaussian rationals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-9, 9), q(1, 7);
  auto draw = [&] { return Scalar(mpq_class(d(rng), q(rng)), mpq_class(d(rng), q(rng))); };
  for (int t = 0; t < 300; ++t) {
    Scalar a = draw(), b = draw(), c = draw();
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  // Pascal's rule.
  for (long n = 1; n <= 12; ++n)
    for (long k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("sparse echelon rank, span and solve") {
  SparseEchelon<int> ech(true);
  SparseVec<int> u{{0, Scalar(1)}, {2, Scalar(3)}};
  SparseVec<int> v{{1, Scalar(2)}, {2, Scalar(-1)}};
  SparseVec<int> w = u;
  axpy(w, Scalar(5), v);  // w = u + 5v
  CHECK(ech.insert(u));
  CHECK(ech.insert(v));
  CHECK_FALSE(ech.insert(w));
  CHECK(ech.rank() == 2);
  CHECK(ech.in_span(w));
  CHECK_FALSE(ech.in_span(SparseVec<int>{{3, Scalar(1)}}));
  auto sol = ech.solve(w);
  REQUIRE(sol);
  CHECK(sol->at(0) == Scalar(1));
  CHECK(sol->at(1) == Scalar(5));
}

TEST_CASE("sparse echelon rank agrees with a dense elimination oracle") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 6, cols = 5;
    std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols));
    SparseEchelon<int> ech;
    for (int r = 0; r < rows; ++r) {
      SparseVec<int> v;
      for (int c = 0; c < cols; ++c) {
        long x = trial % 3 == 0 && r >= 3 ? 0 : d(rng);
        m[r][c] = x;
        if (x) v.emplace(c, Scalar(x));
      }
      ech.insert(v);
    }
    // Dense Gaussian elimination.
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
      int p = -1;
      for (int r = rank; r < rows; ++r)
        if (m[r][c] != 0) p = r;
      if (p < 0) continue;
      std::swap(m[p], m[rank]);
      for (int r = 0; r < rows; ++r) {
        if (r == rank || m[r][c] == 0) continue;
        mpq_class f = m[r][c] / m[rank][c];
        for (int cc = 0; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
      }
      ++rank;
    }
    CHECK(static_cast<int>(ech.rank()) == rank);
  }
}
