// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.
//
// Dotted web diagrams and their formal linear combinations.
//
// A diagram is stored as a source object plus a bottom-to-top list of slices,
// each slice carrying exactly one generator at a position on the current
// object.  Two slicings of the same diagram differ by commuting far-apart
// slices, which costs a Koszul sign when both are odd; every stored term is in
// the canonical slicing produced by `canonicalize`, so equality of morphisms
// is equality of coefficient maps.
//
// Conventions fixed here and used everywhere else:
//   * compose(f, g) is f after g (g at the bottom);
//   * tensor(f, g) is (f (x) 1) o (1 (x) g): the right factor sits lower.
//     This is the order for which the super-interchange law
//     (f (x) g) o (f' (x) g') = (-1)^{|g||f'|} (f o f') (x) (g o g')
//     holds with the usual sign.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qweb/combinat.hpp"
#include "qweb/scalar.hpp"

namespace qweb {

enum class Gen : std::uint8_t { Merge, Split, Cross, WDot, BDot };

struct Generator {
  Gen kind = Gen::WDot;
  int a = 1;
  int b = 0;  // unused for dots

  Composition inputs() const;
  Composition outputs() const;
  int in_arity() const;
  int out_arity() const;
  int parity() const { return kind == Gen::WDot ? 1 : 0; }
  int degree() const { return kind == Gen::BDot ? a : 0; }
  std::string str() const;
  auto operator<=>(const Generator&) const = default;
};

struct Slice {
  int pos = 0;  // index of the first strand the generator consumes
  Generator gen;
  auto operator<=>(const Slice&) const = default;
};

// Applies a slice to an object; throws std::invalid_argument on mismatch.
Composition apply_slice(const Composition& obj, const Slice& s);

// Puts a slice list into canonical order and returns the Koszul sign (+1/-1)
// relating the two readings.  The slices must be valid on `source`.
int canonicalize(const Composition& source, std::vector<Slice>& slices);

class DiagramTerm {
 public:
  DiagramTerm() = default;
  // Validates boundaries.  Does not canonicalize.
  DiagramTerm(Composition source, std::vector<Slice> slices);

  const Composition& source() const { return source_; }
  const Composition& target() const { return target_; }
  const std::vector<Slice>& slices() const { return slices_; }
  int parity() const;
  int degree() const;
  // e.g. "[1,1] split(1,1)@0 wdot(1)@1" read bottom to top; "[2]" for id.
  std::string str() const;

  auto operator<=>(const DiagramTerm&) const = default;

 private:
  Composition source_;
  std::vector<Slice> slices_;
  Composition target_;
};

class Morphism {
 public:
  using Terms = std::map<DiagramTerm, Scalar>;

  Morphism() = default;
  Morphism(Composition src, Composition tgt);  // the zero morphism

  static Morphism identity(const Composition& obj);
  // Canonicalizes the slices (with sign) before storing.
  static Morphism from_slices(const Composition& src, std::vector<Slice> slices,
                              const Scalar& c = Scalar(1));

  const Composition& src() const { return src_; }
  const Composition& tgt() const { return tgt_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Parity of a homogeneous morphism (0 for zero); nullopt when mixed.
  std::optional<int> parity() const;
  // Largest black-dot degree among the terms; -1 for zero.
  int degree() const;
  Morphism parity_part(int p) const;
  Morphism degree_part(int d) const;

  // Adds c times an already canonical term.
  void add_term(const DiagramTerm& t, const Scalar& c);

  Morphism& operator+=(const Morphism& o);
  Morphism& operator-=(const Morphism& o);
  Morphism& operator*=(const Scalar& c);
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }
  friend Morphism operator*(Morphism a, const Scalar& c) { return a *= c; }
  friend Morphism operator*(const Scalar& c, Morphism a) { return a *= c; }
  Morphism operator-() const { return (*this) * Scalar(-1); }
  friend bool operator==(const Morphism& a, const Morphism& b);

  std::string str() const;

 private:
  void check_same_boundary(const Morphism& o) const;
  Composition src_, tgt_;
  Terms terms_;
};

Morphism compose(const Morphism& f, const Morphism& g);  // f o g
Morphism tensor(const Morphism& f, const Morphism& g);
// chain({f, g, h}) = f o g o h;  tensor_all({f, g}) = f (x) g.
Morphism chain(std::initializer_list<Morphism> fs);
Morphism tensor_all(std::initializer_list<Morphism> fs);
// The 180-degree flip about a horizontal axis (contravariant involution).
Morphism flip_div(const Morphism& f);

// Replace every generator slice by a morphism with the same boundary;
// `rule` returns nullopt to keep a generator unchanged.
Morphism substitute(const Morphism& f,
                    const std::function<std::optional<Morphism>(const Generator&)>& rule);

// ---- Builders -------------------------------------------------------------

// Single generator, all thicknesses >= 1 (std::invalid_argument otherwise).
Morphism make(const Generator& g);

// Lenient builders used to write relations uniformly: zero thicknesses
// collapse (merge(0,b) = id(b), cross(0,b) = id(b), bdot(0) = id(), and
// wdot(0) is the zero endomorphism of the unit object).  Negative
// thicknesses throw.
Morphism id(const Composition& obj);
Morphism merge(int a, int b);
Morphism split(int a, int b);
Morphism cross(int a, int b);
Morphism wdot(int a);
Morphism bdot(int a);

// Iterated left merges 1^a -> (a) and iterated right splits (a) -> 1^a;
// for a composition, the tensor product over its parts.
Morphism merge_full(int a);
Morphism split_full(int a);
Morphism merge_full(const Composition& mu);
Morphism split_full(const Composition& mu);

// Thickness-t rungs on a pair of strands (x, y):
//   rung_left(x, y, t):  (x, y) -> (x + t, y - t)   moves t to the left;
//   rung_right(x, y, t): (x, y) -> (x - t, y + t)   moves t to the right.
// With `white`, a white dot sits on the moving strand (t must be 1).
Morphism rung_left(int x, int y, int t, bool white = false);
Morphism rung_right(int x, int y, int t, bool white = false);

// The permutation of thin strands moving a block of a past a block of b,
// built from the supplied thin crossing.
Morphism thin_block_swap(int a, int b, const Morphism& thin_cross);

// ---- Dot elements -----------------------------------------------------------

// merge_full(a) o (thin black dot)^{(x) a} o split_full(a), which is a! times
// the thick black dot.
Morphism dotted_balloon(int a);
// Rewrites every black dot of thickness >= 2 as dotted_balloon(a) / a!.
Morphism thin_black_dots(const Morphism& f);


// omega_{a,r}: split (r, a-r), black dot on the r-leg, merge.  Zero unless
// 0 <= r <= a.
Morphism omega(int a, int r);
// omega-circle_{a,r}: as omega with a white dot on the (a-r)-leg.  Zero
// unless 0 <= r <= a-1.
Morphism omega_circ(int a, int r);
// omega_{a,nu} = omega_{a,nu_1} o omega_{a,nu_2} o ...
Morphism omega_nu(int a, const Partition& nu);
// g_{nu,eta} = omega-circle_{nubar_1} o ... o omega-circle_{nubar_k} o omega_eta.
// nu strict with parts <= a, eta with parts <= a (std::invalid_argument
// otherwise).
Morphism packet(int a, const Partition& nu, const Partition& eta);

// ---- Relation library -------------------------------------------------------

struct Relation {
  std::string name;
  Morphism lhs, rhs;
};

const std::vector<std::string>& relation_suite_names();
// Every relation of the suite instantiated for all thickness choices whose
// source object has weight <= bound.  Unknown suite: std::invalid_argument.
std::vector<Relation> relation_suite(std::string_view name, int bound);

}  // namespace qweb
