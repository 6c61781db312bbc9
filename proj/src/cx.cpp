#include "zetascope/cx.hpp"

namespace zs {

Cx operator*(const Cx& a, const Cx& b) {
  return Cx(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

Cx operator/(const Cx& a, const Cx& b) {
  Real d = b.re_ * b.re_ + b.im_ * b.im_;
  if (d.is_zero()) throw DomainError("complex division by zero");
  return Cx((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
}

std::string Cx::str(long sig_digits) const {
  std::string s = re_.str(sig_digits);
  s += im_.sign() < 0 ? " - " : " + ";
  s += abs(im_).str(sig_digits);
  s += "i";
  return s;
}

Cx conj(const Cx& z) { return Cx(z.re(), -z.im()); }

Real abs(const Cx& z) { return hypot(z.re(), z.im()); }

Real arg(const Cx& z) {
  if (z.re().is_zero() && z.im().is_zero()) throw DomainError("arg of zero");
  return atan2(z.im(), z.re());
}

Cx exp(const Cx& z) {
  Real er = exp(z.re());
  Real s(z.prec()), c(z.prec());
  sin_cos(s, c, z.im());
  return Cx(er * c, er * s);
}

Cx log(const Cx& z) {
  Real a2 = z.re() * z.re() + z.im() * z.im();
  if (a2.is_zero()) throw DomainError("log of complex zero");
  Real half = Real::of(0.5, z.prec());
  return Cx(half * log(a2), atan2(z.im(), z.re()));
}

Cx mul_i(const Cx& z) { return Cx(-z.im(), z.re()); }

Cx reciprocal(const Cx& z) {
  Real d = z.re() * z.re() + z.im() * z.im();
  if (d.is_zero()) throw DomainError("reciprocal of zero");
  return Cx(z.re() / d, -z.im() / d);
}

Cx rpow(const Real& base, const Cx& expo) {
  if (base.sign() <= 0) throw DomainError("rpow requires positive real base");
  Real lb = log(base);
  return exp(Cx(expo.re() * lb, expo.im() * lb));
}

Real dist(const Cx& a, const Cx& b) { return abs(a - b); }

}  // namespace zs
