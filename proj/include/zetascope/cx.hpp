#pragma once

#include <string>

#include "zetascope/real.hpp"

namespace zs {

/// Arbitrary-precision complex value. prec (decimal digits) is the max of
/// the parts' precisions; arithmetic between two Cx promotes to the larger.
class Cx {
public:
  Cx() : re_(kMinDigits), im_(kMinDigits) {}
  explicit Cx(long digits) : re_(digits), im_(digits) {}
  Cx(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit Cx(Real re) : re_(std::move(re)), im_(re_.digits()) {}

  static Cx of(double re, double im, long digits) {
    return Cx(Real::of(re, digits), Real::of(im, digits));
  }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  long prec() const { return re_.digits() > im_.digits() ? re_.digits() : im_.digits(); }

  Cx round_to(long digits) const { return Cx(re_.round_to(digits), im_.round_to(digits)); }

  Cx operator-() const { return Cx(-re_, -im_); }
  friend Cx operator+(const Cx& a, const Cx& b) { return Cx(a.re_ + b.re_, a.im_ + b.im_); }
  friend Cx operator-(const Cx& a, const Cx& b) { return Cx(a.re_ - b.re_, a.im_ - b.im_); }
  friend Cx operator*(const Cx& a, const Cx& b);
  friend Cx operator/(const Cx& a, const Cx& b);
  Cx& operator+=(const Cx& o) { *this = *this + o; return *this; }
  Cx& operator-=(const Cx& o) { *this = *this - o; return *this; }
  Cx& operator*=(const Cx& o) { *this = *this * o; return *this; }

  friend Cx operator*(const Real& a, const Cx& b) { return Cx(a * b.re_, a * b.im_); }

  std::string str(long sig_digits = -1) const;

private:
  Real re_, im_;
};

Cx conj(const Cx& z);
Real abs(const Cx& z);
Real arg(const Cx& z);          // principal value via atan2
Cx exp(const Cx& z);
Cx log(const Cx& z);            // principal branch; DomainError at 0
Cx mul_i(const Cx& z);          // i*z
Cx reciprocal(const Cx& z);

/// base^z for real base > 0 (exp(z log base)); the only complex power the
/// library needs (n^{-s}, p^{-s}, X^{rho-s}, ...).
Cx rpow(const Real& base, const Cx& expo);

/// |a - b|.
Real dist(const Cx& a, const Cx& b);

}  // namespace zs
