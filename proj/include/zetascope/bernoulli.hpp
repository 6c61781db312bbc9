#pragma once

#include "zetascope/real.hpp"

namespace zs {

/// Exact Bernoulli numbers (even index), computed once as rationals and
/// rounded to the requested precision. Thread-safe. k is capped; exceeding
/// the cap raises PrecisionError (a series asked for more depth than any
/// sane evaluation needs).
Real bernoulli_2k(unsigned k, long digits);

/// B_{2k} / (2k)!  -- the Euler-Maclaurin / Stirling coefficient.
Real bernoulli_2k_over_fact(unsigned k, long digits);

/// (1 - 2^{1-2k}) |B_{2k}| / (4k(2k-1)) -- coefficient of t^{1-2k} in the
/// Riemann-Siegel theta asymptotic series.
Real theta_series_coeff(unsigned k, long digits);

}  // namespace zs
