// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.
//
// Normal forms.  Every morphism mu -> lambda is a unique combination of
// elementary chicken-foot diagrams: a non-negative integer matrix with row
// sums lambda and column sums mu, each nonzero entry a "leg" carrying a dot
// packet g_{nu,eta}.
//
// Coordinates are computed without any rewriting system.  The thin explosion
//   X(f) = split_full(lambda) o f o merge_full(mu)
// lands in End(1^m), identified with the affine Sergeev algebra A_m, and is
// injective (merge_full o X(f) o split_full = prod(lambda_i!) prod(mu_j!) f).
// Exploding f and the basis and solving the linear system in PBW
// coordinates gives the coordinates of f.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qweb/combinat.hpp"
#include "qweb/scalar.hpp"
#include "qweb/sergeev.hpp"
#include "qweb/webterm.hpp"

namespace qweb {

struct LegDecor {
  Partition nu;   // strict, parts in 1..a: white balls omega-circle_{nu_i - 1}
  Partition eta;  // parts in 1..a: omega_eta
  auto operator<=>(const LegDecor&) const = default;
};

class ElementaryCFD {
 public:
  ElementaryCFD() = default;
  // Validates sums and decorations (std::invalid_argument).  Missing
  // decorations are trivial; decorations on zero entries are rejected.
  ElementaryCFD(IntMatrix a, std::map<std::pair<int, int>, LegDecor> decor = {});

  const IntMatrix& matrix() const { return a_; }
  const std::map<std::pair<int, int>, LegDecor>& decor() const { return decor_; }
  LegDecor decor_at(int i, int j) const;
  Composition target() const;  // row sums, lambda
  Composition source() const;  // column sums, mu
  int degree() const;
  int parity() const;
  std::string str() const;

  auto operator<=>(const ElementaryCFD&) const = default;

 private:
  IntMatrix a_;
  std::map<std::pair<int, int>, LegDecor> decor_;  // only nontrivial entries
};

// Basis of Hom(mu, lambda) of degree <= maxdeg, sorted by degree (stable
// within a degree).  Weight mismatch or maxdeg < 0 gives an empty list.
std::vector<ElementaryCFD> cfd_basis(const Composition& lambda, const Composition& mu, int maxdeg);
// The finite basis: every leg carries nothing or a single white ball.
std::vector<ElementaryCFD> cfd_basis_finite(const Composition& lambda, const Composition& mu);
// Number of basis elements of each exact degree 0..maxdeg.
std::vector<std::size_t> graded_dimension(const Composition& lambda, const Composition& mu,
                                          int maxdeg);

// Splits per column, packets at the bottom of the legs (leftmost leg lowest,
// legs in column-major order), a reduced crossing layer into row-major order,
// merges per row.
Morphism embed(const ElementaryCFD& c);

class NormalMorphism {
 public:
  using Terms = std::map<ElementaryCFD, Scalar>;

  NormalMorphism() = default;
  NormalMorphism(Composition src, Composition tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {}

  const Composition& src() const { return src_; }
  const Composition& tgt() const { return tgt_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  NormalMorphism degree_part(int d) const;
  Scalar coeff(const ElementaryCFD& c) const;
  void add(const ElementaryCFD& c, const Scalar& v);
  Morphism to_morphism() const;  // the sum of embedded terms
  std::string str() const;

  friend bool operator==(const NormalMorphism&, const NormalMorphism&) = default;

 private:
  Composition src_, tgt_;
  Terms terms_;
};

// The thin explosion as an element of A_m, m = |source| = |target|.
SergeevElement thin_explode(const Morphism& f);

// Exact coordinates in the elementary basis.  Throws std::logic_error
// ("spanning violated") if the system were inconsistent.
NormalMorphism reduce(const Morphism& f);

enum class PushSide { Merge, Split };
enum class PushKind { Omega, OmegaCirc };
// The exact expansion of omega_r (or omega-circle_r) of thickness a+b pushed
// through Merge(a,b) (dot above) or Split(a,b) (dot below), as a sum of
// diagrams with decorated legs.  Out of range r gives zero.
Morphism push_dot_exact(PushSide side, int a, int b, int r, PushKind kind);

struct LeadingClass {
  int degree = -1;        // the filtration degree examined
  NormalMorphism top;     // the degree part of reduce(f)
  bool in_D = false;      // only packets with nu empty
  bool in_E = false;      // any packets (always true on a single strand)
  bool in_Z = false;      // D plus omega-circle_s omega-circle_t with s != t
  bool in_E0 = false;     // no white balls, i.e. E^{0,degree}
};

// Classifies f in End((a)) modulo lower filtration degree.  The degree
// defaults to the black-dot degree of the expression f.
LeadingClass leading_class(const Morphism& f, std::optional<int> degree = std::nullopt);
// True when the degree-d part of reduce(f) lies in the span of the given
// basis elements together with the no-white-dot packets of degree d.
bool leading_in_span(const Morphism& f, int d, const std::vector<ElementaryCFD>& extra);

}  // namespace qweb
