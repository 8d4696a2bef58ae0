// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.
//
// Multivariate polynomials over Scalar and the symmetric-function calculus
// behind the leading-term analysis of dot packets: elementary symmetric
// polynomials, Vandermonde products, the partially symmetric g_lambda, and a
// formal model of how omega / omega-circle act on top filtration degree.
//
// Variables are 1-based: y_1, ..., y_N.

#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qweb/combinat.hpp"
#include "qweb/scalar.hpp"

namespace qweb {

using Exponents = std::vector<int>;

// Graded lexicographic, largest first: higher total degree, then lex.
struct GrLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Exponents, Scalar, GrLexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(const Scalar& c, int nvars);
  static MultiPoly var(int i, int nvars);  // y_i, 1-based

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  Scalar coeff(const Exponents& e) const;
  void add_term(Exponents e, const Scalar& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const { return (*this) * Scalar(-1); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  // Evaluate at a point (point[i-1] is the value of y_i).
  Scalar eval(const std::vector<Scalar>& point) const;
  // Write p = sum_j y_i^j A_j; returns A_0, A_1, ...
  std::vector<MultiPoly> decompose_in(int i) const;
  // Divisibility by a nonzero polynomial; exact multivariate division with
  // respect to the graded lex order.
  bool divisible_by(const MultiPoly& d) const;

  std::string str(const std::string& var = "y") const;

 private:
  void widen(int n);
  int nvars_ = 0;
  Terms terms_;
};

// e_r in the listed variables (1-based indices); e_0 = 1, e_r = 0 if r > |vars|
// or r < 0.
MultiPoly elem_sym(int r, const std::vector<int>& vars, int nvars);
// e_r in arbitrary polynomials (used for signed variables +-y_i).
MultiPoly elem_sym_of(int r, const std::vector<MultiPoly>& xs, int nvars);
// Product of e_{mu_j}; zero if some part is negative.
MultiPoly elem_sym_mu(const std::vector<int>& mu, const std::vector<int>& vars, int nvars);
// prod_{a<b} (y_{v_a} - y_{v_b}); repeated index gives 0.
MultiPoly vandermonde(const std::vector<int>& vars, int nvars);

// The matrix B = {e_{j-1}(x_1..^x_i..x_s)} in variables x_1..x_s.
std::vector<std::vector<MultiPoly>> esym_matrix_B(int s);
// M_{i,j} = x_i^{s-j} * Delta(x_1..^x_i..x_s), 1 <= i,j <= s.
MultiPoly esym_minor(int i, int j, int s);
// Determinant by Laplace expansion along the first row.
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m);
// Determinant of m with row i and column j removed (1-based).
MultiPoly matrix_minor(const std::vector<std::vector<MultiPoly>>& m, int i, int j);

enum class GMethod { Recursive, Raising };
// g_lambda as a polynomial in y_{k+1}..y_a (declared in a variables).
MultiPoly g_lambda(const Partition& lambda, int k, int a, GMethod method);

// (sqrt -1)^k * prod_t (-1)^{p_1+...+p_t} * Delta(y_1..y_k) * g_lambda * e_mu(y_1..y_a).
// `parities` defaults to all even.
MultiPoly packet_leading_poly(const Partition& lambda, const Partition& mu, int a, int k,
                              const std::vector<int>& parities = {});

// Exact rank of {g_lambda(y_{k+1}..y_a) e_mu(y_1..y_a)} in monomial coordinates.
int independence_rank(const std::vector<PairIndex>& pairs, int a, int k);

// ---- Formal leading-term action -------------------------------------------

struct Letter {
  int index = 1;    // underlying basis index i (1-based)
  int parity = 0;   // parity of the original vector v_i
  bool barred = false;
  int current_parity() const { return parity ^ (barred ? 1 : 0); }
  auto operator<=>(const Letter&) const = default;
};
using Word = std::vector<Letter>;

// A formal sum of (poly, word); scalar coefficients live inside the poly.
// y of a letter is +Y_index when unbarred and -Y_index when barred.
class LeadingState {
 public:
  LeadingState() = default;
  explicit LeadingState(int nvars) : nvars_(nvars) {}
  // The single term 1 (x) h (x) v_word.
  static LeadingState basis(const Word& w, const MultiPoly& h);

  int nvars() const { return nvars_; }
  const std::map<Word, MultiPoly>& terms() const { return terms_; }
  void add(const Word& w, const MultiPoly& p);
  MultiPoly component(const Word& w) const;
  // psi(i, j): number of positions whose bar flag differs between words.
  static int psi(const Word& i, const Word& j);

 private:
  int nvars_ = 0;
  std::map<Word, MultiPoly> terms_;
};

struct OmegaSym {
  int a;
  Partition nu;  // omega_{a,nu} = product of omega_{a,nu_j}
};
struct OmegaCircSym {
  int a;
  int r;
};
struct PacketSym {
  int a;
  Partition lambda;  // need not be strict here
  Partition mu;
};
using LeadingSymbol = std::variant<OmegaSym, OmegaCircSym, PacketSym>;

LeadingState leading_action(const LeadingSymbol& sym, const LeadingState& s);

}  // namespace qweb
