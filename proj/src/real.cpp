#include "zetascope/real.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace zs {

mpfr_prec_t bits_for_digits(long digits) {
  if (digits < kMinDigits) digits = kMinDigits;
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 32;
}

Real::Real() : Real(kMinDigits) {}

Real::Real(long digits) : digits_(digits < kMinDigits ? kMinDigits : digits) {
  mpfr_init2(v_, bits_for_digits(digits_));
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : digits_(o.digits_) {
  v_[0] = o.v_[0];
  mpfr_init2(o.v_, MPFR_PREC_MIN);  // leave the source destructible
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    digits_ = o.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) {
    mpfr_swap(v_, o.v_);
    digits_ = o.digits_;
  }
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of(double v, long digits) {
  Real r(digits);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  r.check_finite("of(double)");
  return r;
}

Real Real::of_int(long v, long digits) {
  Real r(digits);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of_uint(unsigned long v, long digits) {
  Real r(digits);
  mpfr_set_ui(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::parse(std::string_view text, long digits) {
  Real r(digits);
  std::string buf(text);
  if (buf.empty() || mpfr_set_str(r.v_, buf.c_str(), 10, MPFR_RNDN) != 0)
    throw ParseError("not a decimal number: '" + buf + "'");
  r.check_finite("parse");
  return r;
}

Real Real::round_to(long digits) const {
  Real r(digits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::str(long sig_digits) const {
  if (sig_digits < 0) sig_digits = digits_;
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", static_cast<int>(sig_digits), v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

void Real::check_finite(const char* op) const {
  if (mpfr_number_p(v_)) return;
  if (mpfr_nan_p(v_)) throw DomainError(std::string("NaN produced in ") + op);
  throw OverflowError(std::string("overflow in ") + op);
}

namespace {
long promoted(const Real& a, const Real& b) {
  return a.digits() > b.digits() ? a.digits() : b.digits();
}
}  // namespace

Real Real::operator-() const {
  Real r(digits_);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

#define ZS_REAL_BINOP(OP, FN)                           \
  Real operator OP(const Real& a, const Real& b) {      \
    Real r(promoted(a, b));                             \
    FN(r.v_, a.v_, b.v_, MPFR_RNDN);                    \
    r.check_finite(#FN);                                \
    return r;                                           \
  }                                                     \
  Real& Real::operator OP##=(const Real& o) {           \
    *this = *this OP o;                                 \
    return *this;                                       \
  }

ZS_REAL_BINOP(+, mpfr_add)
ZS_REAL_BINOP(-, mpfr_sub)
ZS_REAL_BINOP(*, mpfr_mul)
ZS_REAL_BINOP(/, mpfr_div)
#undef ZS_REAL_BINOP

#define ZS_REAL_FN1(NAME, FN)        \
  Real NAME(const Real& x) {         \
    Real r(x.digits());              \
    FN(r.raw(), x.raw(), MPFR_RNDN); \
    return r;                        \
  }

ZS_REAL_FN1(exp, mpfr_exp)
ZS_REAL_FN1(expm1, mpfr_expm1)
ZS_REAL_FN1(log1p, mpfr_log1p)
ZS_REAL_FN1(abs, mpfr_abs)
ZS_REAL_FN1(sin, mpfr_sin)
ZS_REAL_FN1(cos, mpfr_cos)
ZS_REAL_FN1(sinh, mpfr_sinh)
ZS_REAL_FN1(cosh, mpfr_cosh)
#undef ZS_REAL_FN1

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("sqrt of negative value");
  Real r(x.digits());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("log of non-positive value");
  Real r(x.digits());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real floor(const Real& x) {
  Real r(x.digits());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

Real ceil(const Real& x) {
  Real r(x.digits());
  mpfr_ceil(r.raw(), x.raw());
  return r;
}

Real round_nearest(const Real& x) {
  Real r(x.digits());
  mpfr_round(r.raw(), x.raw());
  return r;
}

Real pow(const Real& base, const Real& expo) {
  Real r(base.digits() > expo.digits() ? base.digits() : expo.digits());
  mpfr_pow(r.raw(), base.raw(), expo.raw(), MPFR_RNDN);
  if (!mpfr_number_p(r.raw())) throw OverflowError("pow");
  return r;
}

Real pow_int(const Real& base, long e) {
  Real r(base.digits());
  mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
  if (!mpfr_number_p(r.raw())) throw OverflowError("pow_int");
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(y.digits() > x.digits() ? y.digits() : x.digits());
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

void sin_cos(Real& s, Real& c, const Real& x) {
  s = Real(x.digits());
  c = Real(x.digits());
  mpfr_sin_cos(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
}

Real hypot(const Real& x, const Real& y) {
  Real r(x.digits() > y.digits() ? x.digits() : y.digits());
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  if (!mpfr_number_p(r.raw())) throw OverflowError("hypot");
  return r;
}

const Real& min(const Real& a, const Real& b) { return a <= b ? a : b; }
const Real& max(const Real& a, const Real& b) { return a >= b ? a : b; }

Real const_pi(long digits) {
  Real r(digits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real const_euler_gamma(long digits) {
  Real r(digits);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}

Real const_log10(long digits) {
  Real r(digits);
  mpfr_set_ui(r.raw(), 10, MPFR_RNDN);
  mpfr_log(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

Real loglog(const Real& t) {
  if (t <= 1.0) throw DomainError("loglog requires t > 1");
  Real lt = log(t);
  if (lt.sign() <= 0) throw DomainError("loglog requires log t > 0");
  return log(lt);
}

Constants Constants::at(long digits) {
  Real g = const_euler_gamma(digits);
  return Constants{const_pi(digits), g, exp(g)};
}

}  // namespace zs
