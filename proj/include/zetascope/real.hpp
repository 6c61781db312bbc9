#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

#include "zetascope/errors.hpp"

namespace zs {

/// Minimum working precision in decimal digits; every value carries at
/// least this much.
inline constexpr long kMinDigits = 15;

/// Default working precision (decimal digits) when none is requested.
inline constexpr long kDefaultDigits = 30;

/// Decimal digits -> mantissa bits, with guard bits so that chains of
/// operations stay honest to the advertised digit count.
mpfr_prec_t bits_for_digits(long digits);

/// Arbitrary-precision real number. Value semantics; precision is tracked
/// in decimal digits and binary operations promote to the larger operand's
/// precision. Results are always finite: NaN or overflow raises a typed
/// error instead of propagating.
class Real {
public:
  Real();
  explicit Real(long digits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real of(double v, long digits);
  static Real of_int(long v, long digits);
  static Real of_uint(unsigned long v, long digits);
  /// Parses a decimal literal. Throws ParseError on malformed input.
  static Real parse(std::string_view text, long digits);

  long digits() const { return digits_; }
  /// Same value rounded to a different working precision.
  Real round_to(long digits) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Decimal rendering with a fixed number of significant digits
  /// (defaults to the value's own precision). Deterministic.
  std::string str(long sig_digits = -1) const;

  // Raw handles for implementation kernels.
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  bool operator<(double d) const { return mpfr_cmp_d(v_, d) < 0; }
  bool operator<=(double d) const { return mpfr_cmp_d(v_, d) <= 0; }
  bool operator>(double d) const { return mpfr_cmp_d(v_, d) > 0; }
  bool operator>=(double d) const { return mpfr_cmp_d(v_, d) >= 0; }

private:
  void check_finite(const char* op) const;

  mpfr_t v_;
  long digits_;
};

Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);    // DomainError for x <= 0
Real log1p(const Real& x);
Real abs(const Real& x);
Real floor(const Real& x);
Real ceil(const Real& x);
Real round_nearest(const Real& x);
Real pow(const Real& base, const Real& expo);
Real pow_int(const Real& base, long e);
Real atan2(const Real& y, const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
void sin_cos(Real& s, Real& c, const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real hypot(const Real& x, const Real& y);
const Real& min(const Real& a, const Real& b);
const Real& max(const Real& a, const Real& b);

Real const_pi(long digits);
Real const_euler_gamma(long digits);
Real const_log10(long digits);

/// log(log(t)); DomainError unless t > 1 and log(t) > 0 admits a second log.
Real loglog(const Real& t);

/// Named constants at a given working precision.
struct Constants {
  Real pi;
  Real euler_gamma;
  Real e_gamma;

  static Constants at(long digits);
};

}  // namespace zs
