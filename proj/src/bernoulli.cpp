#include "zetascope/bernoulli.hpp"

#include <gmp.h>

#include <mutex>
#include <vector>

namespace zs {

namespace {

constexpr unsigned kMaxIndex = 640;  // B_0 .. B_640

// Grows the exact table B_0..B_n using sum_{k=0}^{m} C(m+1,k) B_k = 0.
class BernoulliCache {
public:
  // Returns a pointer valid for the process lifetime (entries are never
  // reallocated once created).
  const __mpq_struct* get(unsigned n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (table_.size() <= n) {
      unsigned m = static_cast<unsigned>(table_.size());
      auto* q = new mpq_t[1];
      mpq_init(q[0]);
      if (m == 0) {
        mpq_set_ui(q[0], 1, 1);
      } else {
        mpq_t acc, term;
        mpq_init(acc);
        mpq_init(term);
        mpz_t binom;
        mpz_init(binom);
        for (unsigned k = 0; k + 1 <= m; ++k) {
          mpz_bin_uiui(binom, m + 1, k);
          mpq_set_z(term, binom);
          mpq_mul(term, term, table_[k][0]);
          mpq_add(acc, acc, term);
        }
        mpq_set_si(q[0], -1, 1);
        mpq_div_ui_helper(q[0], m + 1);
        mpq_mul(q[0], q[0], acc);
        mpq_canonicalize(q[0]);
        mpz_clear(binom);
        mpq_clear(acc);
        mpq_clear(term);
      }
      table_.push_back(q);
    }
    return table_[n][0];
  }

private:
  static void mpq_div_ui_helper(mpq_t q, unsigned long d) {
    mpq_t div;
    mpq_init(div);
    mpq_set_ui(div, d, 1);
    mpq_div(q, q, div);
    mpq_clear(div);
  }

  std::mutex mu_;
  std::vector<mpq_t*> table_;
};

BernoulliCache& cache() {
  static BernoulliCache c;
  return c;
}

}  // namespace

Real bernoulli_2k(unsigned k, long digits) {
  if (2 * k > kMaxIndex)
    throw PrecisionError("Bernoulli index " + std::to_string(2 * k) + " beyond series budget");
  Real r(digits);
  mpfr_set_q(r.raw(), cache().get(2 * k), MPFR_RNDN);
  return r;
}

Real bernoulli_2k_over_fact(unsigned k, long digits) {
  if (2 * k > kMaxIndex)
    throw PrecisionError("Bernoulli index " + std::to_string(2 * k) + " beyond series budget");
  Real r(digits);
  mpfr_set_q(r.raw(), cache().get(2 * k), MPFR_RNDN);
  mpfr_t fact;
  mpfr_init2(fact, mpfr_get_prec(r.raw()));
  mpfr_fac_ui(fact, 2 * k, MPFR_RNDN);
  mpfr_div(r.raw(), r.raw(), fact, MPFR_RNDN);
  mpfr_clear(fact);
  return r;
}

Real theta_series_coeff(unsigned k, long digits) {
  // (1 - 2^{1-2k}) |B_2k| / (4k(2k-1))
  Real b = abs(bernoulli_2k(k, digits));
  Real one = Real::of_int(1, digits);
  Real two_pow = pow_int(Real::of_int(2, digits), 1 - 2 * static_cast<long>(k));
  Real denom = Real::of_int(4L * k * (2L * k - 1), digits);
  return (one - two_pow) * b / denom;
}

}  // namespace zs
