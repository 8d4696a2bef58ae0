// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.
//
// Gaussian rationals Q(i).  Every coefficient in the engine, diagrammatic or
// matrix valued, lives here: diagram relations only need the rational part,
// while the functor needs sqrt(-1) for the odd map c.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qweb {

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar frac(long p, long q);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Serialized as "p/q" or "p/q + r/s i" (integers print without "/1").
  std::string str() const;
  static Scalar parse(std::string_view text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Multiply by (-1)^k.
inline Scalar signed_unit(int k) { return (k & 1) ? Scalar(-1) : Scalar(1); }

mpz_class factorial(long n);
mpz_class binomial(long n, long k);  // zero outside 0 <= k <= n

}  // namespace qweb
