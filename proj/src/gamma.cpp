#include "zetascope/gamma.hpp"

#include <cmath>

#include "zetascope/bernoulli.hpp"

namespace zs {

namespace {

bool is_nonpositive_integer(const Cx& z) {
  if (!z.im().is_zero()) return false;
  if (z.re().sign() > 0) return false;
  return z.re() == floor(z.re());
}

long guard_digits_for(const Cx& z) {
  double az = std::abs(z.re().to_double()) + std::abs(z.im().to_double());
  long g = 8;
  if (az > 1) g += static_cast<long>(std::ceil(std::log10(az)));
  return g;
}

// Stirling radius: on the imaginary axis the attainable accuracy of the
// divergent series is ~e^{-pi|w|}, so the shift target depends on digits.
long stirling_radius(long digits) {
  long r = static_cast<long>(std::ceil(0.7329 * (digits + 2))) + 2;
  return r < 14 ? 14 : r;
}

struct StirlingOut {
  Cx log_gamma;
  Cx psi;
};

// Stirling series at w with |w| >= stirling_radius(digits), Re w > 0.
// want_psi controls whether the psi series is accumulated too.
StirlingOut stirling(const Cx& w, long digits, bool want_lg, bool want_psi) {
  const long d = digits;
  Cx logw = log(w);
  Cx inv = reciprocal(w);
  Cx inv2 = inv * inv;

  Real half = Real::of(0.5, d);
  Real two_pi = Real::of_int(2, d) * const_pi(d);

  StirlingOut out;
  if (want_lg) {
    out.log_gamma = (w - Cx(half)) * logw - w + Cx(half * log(two_pi));
  }
  if (want_psi) {
    out.psi = logw - Cx(half) * inv;
  }

  // lg terms: B_2k/(2k(2k-1)) w^{1-2k};  psi terms: -B_2k/(2k) w^{-2k}
  Cx podd = inv;          // w^{1-2k} for k=1
  Cx peven = inv2;        // w^{-2k} for k=1
  Real target = Real::of(1.0, d);
  {
    Real sc(d);
    mpfr_set_ui_2exp(sc.raw(), 1, -static_cast<long>(bits_for_digits(d)) + 8, MPFR_RNDN);
    target = sc;  // ~ulp-scale relative floor
  }
  Real scale = max(Real::of(1.0, d), abs(logw) * abs(w));
  Real two_k_guard = Real::of(2.0, d);  // sec^{2k}(arg/2) <= 2^k on Re w > 0
  Real guard_pow = Real::of(1.0, d);

  long max_k = 3 * stirling_radius(d) + 16;
  for (long k = 1; k <= max_k; ++k) {
    Real b = bernoulli_2k(static_cast<unsigned>(k), d);
    Cx lg_term, psi_term;
    Real mag(d);
    if (want_lg) {
      lg_term = Cx(b / Real::of_int(2 * k * (2 * k - 1), d)) * podd;
      mag = abs(lg_term);
    }
    if (want_psi) {
      psi_term = Cx(b / Real::of_int(2 * k, d)) * peven;
      Real m2 = abs(psi_term);
      if (!want_lg || m2 > mag) mag = m2;
    }
    if (want_lg) out.log_gamma += lg_term;
    if (want_psi) out.psi -= psi_term;

    guard_pow *= two_k_guard;
    if (mag * guard_pow <= target * scale) return out;
    podd = podd * inv2;
    peven = peven * inv2;
  }
  throw PrecisionError("Stirling series did not reach target accuracy");
}

// Shift z (Re z > 0) to w = z + n with |w| >= radius; accumulates
// sum log(z+k) and sum 1/(z+k) for the downward recurrences.
void shifted_eval(const Cx& z, long digits, bool want_lg, bool want_psi, Cx& lg, Cx& psi) {
  const long R = stirling_radius(digits);
  double x = z.re().to_double(), y = z.im().to_double();
  long n = 0;
  if (x * x + y * y < static_cast<double>(R) * R) {
    double need = std::sqrt(std::max(0.0, static_cast<double>(R) * R - y * y));
    n = static_cast<long>(std::ceil(need - x)) + 1;
    if (n < 0) n = 0;
  }

  Cx log_corr(digits), psi_corr(digits);
  for (long k = 0; k < n; ++k) {
    Cx zk = z + Cx(Real::of_int(k, digits));
    if (want_lg) log_corr += log(zk);
    if (want_psi) psi_corr += reciprocal(zk);
  }
  Cx w = z + Cx(Real::of_int(n, digits));
  StirlingOut st = stirling(w, digits, want_lg, want_psi);
  if (want_lg) lg = st.log_gamma - log_corr;
  if (want_psi) psi = st.psi - psi_corr;
}

// sin(pi z) with the cosh/sinh split, safe for large |Im z|.
Cx sin_pi(const Cx& z, long digits) {
  Real pi = const_pi(digits);
  Real px = pi * z.re(), py = pi * z.im();
  Real s(digits), c(digits);
  sin_cos(s, c, px);
  return Cx(s * cosh(py), c * sinh(py));
}

}  // namespace

Cx log_gamma_cx(const Cx& z) {
  if (z.re().sign() <= 0) throw DomainError("log_gamma_cx requires Re z > 0");
  long d = z.prec() + guard_digits_for(z);
  Cx lg(d), psi(d);
  shifted_eval(z.round_to(d), d, true, false, lg, psi);
  return lg.round_to(z.prec());
}

namespace {

void gamma_digamma_impl(const Cx& z, long out_prec, bool want_gamma, bool want_psi,
                        Cx& gamma_out, Cx& psi_out) {
  if (is_nonpositive_integer(z))
    throw PoleError("gamma pole at z = " + z.re().str(6));
  long d = out_prec + guard_digits_for(z);
  Cx zz = z.round_to(d);
  Real half = Real::of(0.5, d);

  if (z.re() >= half) {
    Cx lg(d), psi(d);
    shifted_eval(zz, d, want_gamma, want_psi, lg, psi);
    if (want_gamma) gamma_out = exp(lg).round_to(out_prec);
    if (want_psi) psi_out = psi.round_to(out_prec);
    return;
  }

  // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z)),
  //             psi(z) = psi(1-z) - pi cot(pi z).
  Cx one_minus = Cx(Real::of(1.0, d)) - zz;
  Cx lg1(d), psi1(d);
  shifted_eval(one_minus, d, want_gamma, want_psi, lg1, psi1);
  Cx sp = sin_pi(zz, d);
  if (abs(sp).is_zero()) throw PoleError("gamma pole (sin pi z = 0)");
  if (want_gamma) {
    Real pi = const_pi(d);
    Cx lg = Cx(log(pi)) - log(sp) - lg1;
    // exp may overflow only for huge |Gamma|, which the type cannot carry
    gamma_out = exp(lg).round_to(out_prec);
  }
  if (want_psi) {
    Real pi = const_pi(d);
    Real px = pi * zz.re(), py = pi * zz.im();
    Real s(d), c(d);
    sin_cos(s, c, px);
    // cot(pi z) = cos(pi z)/sin(pi z), cosh/sinh split as in sin_pi
    Cx cot = Cx(c * cosh(py), -s * sinh(py)) / sp;
    psi_out = (psi1 - Cx(pi) * cot).round_to(out_prec);
  }
}

}  // namespace

Cx gamma_cx(const Cx& z) {
  Cx g, p;
  gamma_digamma_impl(z, z.prec(), true, false, g, p);
  return g;
}

Cx digamma_cx(const Cx& z) {
  Cx g, p;
  gamma_digamma_impl(z, z.prec(), false, true, g, p);
  return p;
}

void gamma_and_digamma(const Cx& z, Cx& gamma_out, Cx& psi_out) {
  gamma_digamma_impl(z, z.prec(), true, true, gamma_out, psi_out);
}

Real gamma_kernel_bound(const Real& sigma, const Real& y) {
  Real ay = abs(y);
  if (ay < 1.0) throw DomainError("gamma_kernel_bound requires |y| >= 1");
  if (sigma <= 0.5 || sigma > 1.125)
    throw DomainError("gamma_kernel_bound requires 1/2 < sigma <= 9/8");
  long d = sigma.digits() > y.digits() ? sigma.digits() : y.digits();
  Real k = Real::of_int(3, d);
  Real half_pi = const_pi(d) * Real::of(0.5, d);
  return k * pow(ay, -sigma) * exp(-half_pi * ay);
}

}  // namespace zs
