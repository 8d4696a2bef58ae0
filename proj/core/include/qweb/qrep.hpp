// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.
//
// The representation functor into q_n-supermodules, used as an independent
// oracle for every diagrammatic identity.
//
// V has basis v_1..v_n (even) and v_1b..v_nb (odd).  Internally a basis
// vector is an index 0..2n-1 with the odd copies at n..2n-1, so a monomial of
// the supersymmetric power S^a(V) in normal order (evens ascending, then odds
// ascending) is simply a sorted word of indices with no repeated odd letter.
//
// A web object (a_1, ..., a_k) is sent to M (x) S^{a_1}(V) (x) ... where the
// auxiliary module M is itself a tensor product of symmetric powers, given by
// a ModuleSpec listing their degrees.  Black dots act through the Casimir-type
// operator Omega on "everything to the left" (including M) tensored with the
// strand carrying the dot.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qweb/scalar.hpp"
#include "qweb/webterm.hpp"

namespace qweb {

// Raised when the oracle would exceed its dimension cap.
struct OracleTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gaussian integers with checked 64-bit arithmetic; the fast path of the
// oracle.  Overflow throws std::overflow_error and the caller falls back to
// Scalar.
struct GaussInt {
  std::int64_t re = 0, im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  GaussInt& operator+=(const GaussInt& o);
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b);
  friend bool operator==(const GaussInt&, const GaussInt&) = default;
  Scalar to_scalar() const { return Scalar(mpq_class(re), mpq_class(im)); }
};

using MonoWord = std::vector<int>;

// The monomial basis of S^d(V) for V of dimension (n|n), in a fixed order
// (by number of odd letters, then lexicographically).
class SymPowerBasis {
 public:
  SymPowerBasis(int n, int degree);

  int n() const { return n_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(words_.size()); }
  const MonoWord& monomial(int id) const { return words_.at(id); }
  int parity(int id) const { return parity_.at(id); }
  // -1 when the word is not a normal-ordered monomial of this degree.
  int index_of(const MonoWord& w) const;
  // "v1 v1 v2b"; "1" for the empty monomial.
  std::string str(int id) const;

 private:
  int n_, degree_;
  std::vector<MonoWord> words_;
  std::vector<int> parity_;
  std::map<MonoWord, int> index_;
};

// Shared, lazily built bases.
const SymPowerBasis& sym_basis(int n, int degree);

// Normal-orders a word in the supersymmetric algebra.  Returns the sign and
// the sorted word, or nullopt when an odd letter repeats.
std::optional<std::pair<int, MonoWord>> normal_order(MonoWord w, int n);

// A basis element of q_n: e^eps_{ij}, or with `companion` its partner
// f^eps_{ij} in gl(n|n).  Indices are 1-based.
struct QnElement {
  int eps = 0;
  int i = 1, j = 1;
  bool companion = false;
  int parity() const { return eps; }
  std::string str() const;
};

// e_{pq} of gl(n|n) on 0-based indices with odd copies at n..2n-1.
struct GlTerm {
  int p, q, coeff;
};
using GlElement = std::vector<GlTerm>;
GlElement gl_element(const QnElement& x, int n);

// Derivation action on a monomial of S^a(V), normal ordered.  Index out of
// range throws std::out_of_range.
std::map<MonoWord, Scalar> act_on_sympower(const QnElement& x, const MonoWord& m, int n);
std::map<MonoWord, Scalar> act_on_sympower(const GlElement& x, const MonoWord& m, int n);

// Degrees of the symmetric powers making up the auxiliary module; {1} is
// M = V and {} is the trivial module.
using ModuleSpec = std::vector<int>;

struct OracleOptions {
  std::int64_t dim_cap = 20000;
};

// A linear map between tensor products of symmetric powers.  Columns are
// sparse because the dense matrices are far too large at the sizes the
// checks need; dense() is available for small maps.
class SuperLinearMap {
 public:
  using Column = std::vector<std::pair<std::int64_t, Scalar>>;  // sorted rows

  SuperLinearMap() = default;
  SuperLinearMap(std::vector<int> source_factors, std::vector<int> target_factors, int n);

  static SuperLinearMap identity(const std::vector<int>& factors, int n);

  int n() const { return n_; }
  const std::vector<int>& source_factors() const { return src_; }
  const std::vector<int>& target_factors() const { return tgt_; }
  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  const std::vector<Column>& columns() const { return columns_; }
  std::vector<Column>& columns() { return columns_; }
  Scalar entry(std::int64_t row, std::int64_t col) const;
  bool is_zero() const;
  // 0 or 1 for homogeneous maps (by the parity of basis vectors); nullopt
  // when mixed.  The zero map reports 0.
  std::optional<int> parity() const;
  std::vector<std::vector<Scalar>> dense() const;  // throws above 10^6 entries

  SuperLinearMap& operator+=(const SuperLinearMap& o);
  SuperLinearMap& operator-=(const SuperLinearMap& o);
  SuperLinearMap& operator*=(const Scalar& c);
  friend SuperLinearMap operator+(SuperLinearMap a, const SuperLinearMap& b) { return a += b; }
  friend SuperLinearMap operator-(SuperLinearMap a, const SuperLinearMap& b) { return a -= b; }
  friend SuperLinearMap operator*(SuperLinearMap a, const Scalar& c) { return a *= c; }
  // Composition: (a * b)(v) = a(b(v)).
  friend SuperLinearMap operator*(const SuperLinearMap& a, const SuperLinearMap& b);
  friend bool operator==(const SuperLinearMap& a, const SuperLinearMap& b);

 private:
  void check_same_shape(const SuperLinearMap& o) const;
  int n_ = 0;
  std::vector<int> src_, tgt_;
  std::int64_t rows_ = 0, cols_ = 0;
  std::vector<Column> columns_;
};

// Dimension of the tensor product of the listed symmetric powers; throws
// OracleTooLarge on 64-bit overflow.
std::int64_t tensor_dim(const std::vector<int>& factors, int n);
// Parity of a basis vector of that tensor product.
int basis_parity(const std::vector<int>& factors, int n, std::int64_t index);
// Human readable basis vector, e.g. "v1 (x) v1 v2b".
std::string basis_str(const std::vector<int>& factors, int n, std::int64_t index);

// A single generator on its own boundary (trivial M).
SuperLinearMap psi_generator(const Generator& g, int n);
// Omega on M (x) S^a(V).
SuperLinearMap omega_op(const ModuleSpec& m, int a, int n);
// The value of a morphism on M (x) S^{src}(V).  Source and target dimensions
// above the cap throw OracleTooLarge("oracle too large").
SuperLinearMap eval_morphism(const Morphism& f, int n, const ModuleSpec& m = {1},
                             const OracleOptions& opts = {});
// Only the listed source columns (indices into the source basis), in order.
std::vector<SuperLinearMap::Column> eval_columns(const Morphism& f, int n, const ModuleSpec& m,
                                                 const std::vector<std::int64_t>& cols);

// The action of x on a tensor product of symmetric powers (with Koszul
// signs), as a linear map.
SuperLinearMap qn_action(const QnElement& x, const std::vector<int>& factors, int n);

// Exact rank of the morphisms' images, stacked as vectors.  Columns are
// sampled in growing batches until the rank reaches the number of inputs,
// so an independent family never costs a full evaluation.
int rank_of(const std::vector<Morphism>& fs, int n, const ModuleSpec& m = {1},
            const OracleOptions& opts = {});

}  // namespace qweb
