// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.
//
// The affine Sergeev superalgebra A_n: even s_1..s_{n-1} and x_1..x_n, odd
// c_1..c_n, with
//   s_i^2 = 1, braid relations, x_i x_j = x_j x_i,
//   c_i^2 = 1, c_i c_j = -c_j c_i (i != j), c_i x_i = -x_i c_i, c_i x_j = x_j c_i,
//   w c_j = c_{w(j)} w,  s_i x_j = x_j s_i (j != i, i+1),
//   x_i s_i = s_i x_{i+1} + 1 - c_i c_{i+1}.
// Elements are kept in the PBW basis w c^a x^b.  Permutations are stored in
// one-line notation, so the symmetric group relations never need rewriting.

#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qweb/scalar.hpp"
#include "qweb/webterm.hpp"

namespace qweb {

struct PBWMonomial {
  std::vector<int> w;  // one-line notation, values 1..n
  std::vector<int> c;  // exponents in {0, 1}
  std::vector<int> x;  // exponents >= 0

  static PBWMonomial one(int n);
  int n() const { return static_cast<int>(w.size()); }
  int parity() const;
  int x_degree() const;
  // Reduced word i_1 ... i_k with w = s_{i_1} ... s_{i_k}.
  std::vector<int> reduced_word() const;
  // "s1 s2 c1 x2^3"; "1" for the unit.
  std::string str() const;
  // "w=[2,1] c=(1,0) x=(0,3)".
  std::string pbw_str() const;

  auto operator<=>(const PBWMonomial&) const = default;
};

struct SergeevLetter {
  enum Kind : char { S = 's', X = 'x', C = 'c' };
  Kind kind;
  int index;  // 1-based
  std::string str() const;
  bool operator==(const SergeevLetter&) const = default;
};
using SergeevWord = std::vector<SergeevLetter>;

// Parses "x1 s1 c2" (letters separated by spaces; "x2^3" repeats a letter).
// Throws std::invalid_argument on bad syntax or an index invalid for n.
SergeevWord parse_sergeev_word(std::string_view text, int n);
std::string word_str(const SergeevWord& w);

class SergeevElement {
 public:
  using Terms = std::map<PBWMonomial, Scalar>;

  SergeevElement() = default;
  explicit SergeevElement(int n) : n_(n) {}
  static SergeevElement one(int n);
  static SergeevElement monomial(const PBWMonomial& m, const Scalar& c = Scalar(1));

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const PBWMonomial& m) const;
  void add(const PBWMonomial& m, const Scalar& c);

  SergeevElement& operator+=(const SergeevElement& o);
  SergeevElement& operator-=(const SergeevElement& o);
  SergeevElement& operator*=(const Scalar& c);
  friend SergeevElement operator+(SergeevElement a, const SergeevElement& b) { return a += b; }
  friend SergeevElement operator-(SergeevElement a, const SergeevElement& b) { return a -= b; }
  friend SergeevElement operator*(SergeevElement a, const Scalar& c) { return a *= c; }
  friend bool operator==(const SergeevElement& a, const SergeevElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // "s1 x2 + 1 - c1 c2": longer permutations first, then higher x-degree,
  // then fewer c's.
  std::string str() const;

 private:
  void check_n(const SergeevElement& o) const;
  int n_ = 0;
  Terms terms_;
};

SergeevElement multiply(const SergeevElement& u, const SergeevElement& v);
SergeevElement straighten(const SergeevWord& w, int n);
// Right multiplication by a single generator.
SergeevElement times_letter(const SergeevElement& u, const SergeevLetter& l);

// The symmetrizer: the sum of all permutations of the strands first..first+k-1
// (1-based) inside A_n.
SergeevElement symmetrizer(int n, int first, int k);

// ---- The dictionary with End(1^n) --------------------------------------------------

// x_j -> thin black dot on strand j, c_j -> thin white dot, s_i -> thin crossing.
Morphism phi(const SergeevLetter& l, int n);
// Left-to-right product becomes top-to-bottom composition.
Morphism phi(const SergeevWord& w, int n);
Morphism phi(const PBWMonomial& m);
Morphism phi(const SergeevElement& u);

class NormalMorphism;  // normalform.hpp

// Sign relating a basis diagram on 1^n to its PBW monomial: with e white
// dots, the diagram equals (-1)^{e(e-1)/2} w c^a x^b.
int decode_sign(int white_dots);
// Reads a normal form on 1^n as an element of A_n.  Non-thin boundaries
// throw std::invalid_argument.
SergeevElement decode(const NormalMorphism& nm);

}  // namespace qweb
