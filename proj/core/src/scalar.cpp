// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.

#include "qweb/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace qweb {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::frac(long p, long q) {
  if (q == 0) throw std::domain_error("division by zero");
  mpq_class r(p, q);
  r.canonicalize();
  return Scalar(r);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
  mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class m = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

std::string Scalar::str() const {
  std::string s = re_.get_str();
  if (sgn(im_) != 0) s += " + " + im_.get_str() + " i";
  return s;
}

namespace {

mpq_class parse_fraction(std::string_view t) {
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
  if (t.empty()) throw std::invalid_argument("empty fraction");
  mpq_class q;
  if (q.set_str(std::string(t), 10) != 0)
    throw std::invalid_argument("bad fraction '" + std::string(t) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  auto plus = text.find(" + ");
  if (plus == std::string_view::npos) {
    auto t = text;
    while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
    if (!t.empty() && t.back() == 'i') {
      t.remove_suffix(1);
      return Scalar(0, t.empty() ? mpq_class(1) : parse_fraction(t));
    }
    return Scalar(parse_fraction(text));
  }
  auto imag = text.substr(plus + 3);
  while (!imag.empty() && imag.back() == ' ') imag.remove_suffix(1);
  if (imag.empty() || imag.back() != 'i')
    throw std::invalid_argument("imaginary part must end with 'i'");
  imag.remove_suffix(1);
  return Scalar(parse_fraction(text.substr(0, plus)), parse_fraction(imag));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

mpz_class factorial(long n) {
  mpz_class r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace qweb
