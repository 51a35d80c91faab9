#pragma once

// Fourier analysis of step functions.
//
//   f^(xi) = integral_K f(x) conj(chi(xi x)) dx
//
// For f constant on cosets of B^k and supported in the ball B^l, the
// transform is constant on cosets of B^{-l} and supported in B^{-k}; both
// transforms below return exactly that table. Values whose modulus falls
// under 1e-13 * ||f||_1 (the sup-norm bound of f^) are treated as cancelled
// and dropped.

#include <cstdint>

#include "nuframe/stepfn.hpp"

namespace nuframe {

/// Direct double sum over input and output cells, in map order.
StepFunction transform(const StepFunction& f);
StepFunction inverse_transform(const StepFunction& g);

/// Chrestenson butterfly over the base-q digits of the support ball:
/// O(M q log_q M) for M cells. Agrees with transform() to rounding.
StepFunction fast_transform(const StepFunction& f);
StepFunction fast_inverse_transform(const StepFunction& g);

/// integral_D f(x) conj(chi(u(n) x)) dx.
Complex fourier_coefficient(const PeriodicStepFunction& f, std::uint64_t n);

/// x -> chi(u(n) x) on D, at resolution max(k, number of base-q digits of n).
PeriodicStepFunction character_on_ring(std::shared_ptr<const LocalField> field, std::uint64_t n, int k);

}  // namespace nuframe
