#pragma once

#include <complex>

#include "nuframe/algebra.hpp"

namespace nuframe {

/// The additive character: exp(2 pi i a / p), a = unit digit of the t^{-1}
/// coefficient of x. Trivial on D, nontrivial on B^{-1}.
std::complex<double> chi(const FieldElement& x, const LocalField& field);

/// chi(xi * x).
std::complex<double> chi_xi(const FieldElement& xi, const FieldElement& x, const LocalField& field);

/// exp(2 pi i k / p) from the field's root table, k taken mod p.
std::complex<double> root(const LocalField& field, int k);

}  // namespace nuframe
