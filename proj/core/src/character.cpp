#include "nuframe/character.hpp"

namespace nuframe {

std::complex<double> root(const LocalField& field, int k) {
  const int p = field.p();
  const auto [re, im] = field.root_of_unity(((k % p) + p) % p);
  return {re, im};
}

std::complex<double> chi(const FieldElement& x, const LocalField& field) {
  return root(field, field.unit_digit(x.coefficient(-1)));
}

std::complex<double> chi_xi(const FieldElement& xi, const FieldElement& x, const LocalField& field) {
  return root(field, field.pairing_digit(xi, x));
}

}  // namespace nuframe
