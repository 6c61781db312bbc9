#pragma once

#include "zetascope/cx.hpp"

namespace zs {

/// log Gamma on Re z > 0, the standard continuous branch (argument-shift
/// recurrence into |z| large enough for the Stirling series, which is chosen
/// from the working precision). DomainError for Re z <= 0.
Cx log_gamma_cx(const Cx& z);

/// Gamma(z) on the plane minus the poles. Re z < 1/2 goes through the
/// reflection formula. PoleError at non-positive integers, OverflowError
/// when |Gamma| leaves the representable range.
Cx gamma_cx(const Cx& z);

/// psi(z) = Gamma'/Gamma(z), same domain handling as gamma_cx.
Cx digamma_cx(const Cx& z);

/// Fused evaluation sharing the shift and the Stirling pass; used by the
/// oscillatory-integral kernel where both factors appear.
void gamma_and_digamma(const Cx& z, Cx& gamma_out, Cx& psi_out);

/// Explicit majorant M(sigma,y) = 3 |y|^{-sigma} e^{-pi|y|/2} for
/// |Gamma(1/2-sigma+iy)| on |y| >= 1, 1/2 < sigma <= 9/8 (checked property;
/// the truncation logic charges tails against it).
Real gamma_kernel_bound(const Real& sigma, const Real& y);

}  // namespace zs
