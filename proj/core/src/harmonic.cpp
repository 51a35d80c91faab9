#include "nuframe/harmonic.hpp"

#include <cmath>

#include "nuframe/character.hpp"

namespace nuframe {

namespace {

constexpr double kCancelTol = 1e-13;

Complex snap(Complex v, double tol) {
  return {std::abs(v.real()) <= tol ? 0.0 : v.real(), std::abs(v.imag()) <= tol ? 0.0 : v.imag()};
}

// Digits at exponents lo .. lo + n - 1 taken from the base-q expansion of index.
FieldElement element_from_index(std::uint64_t index, int lo, int n, std::uint32_t q) {
  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(n));
  for (auto& d : coeffs) {
    d = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  return FieldElement::from_coefficients(lo, std::move(coeffs));
}

std::uint64_t index_from_element(const FieldElement& x, int lo, int n, std::uint32_t q) {
  std::uint64_t index = 0;
  for (int e = lo + n - 1; e >= lo; --e) index = index * q + x.coefficient(e).index();
  return index;
}

// sign = -1 for the forward transform (conjugated character), +1 for the inverse.
StepFunction naive(const StepFunction& f, int sign) {
  const auto& field = f.field();
  const std::uint32_t q = field.q();
  const int k = f.resolution();
  const int l = f.support_exponent();
  StepFunction out(f.field_ptr(), -l);
  if (f.is_zero()) return out;
  const int n = k - l;
  const std::uint64_t count = checked_pow(q, static_cast<unsigned>(n));
  const double measure = std::pow(static_cast<double>(q), -k);
  const double tol = kCancelTol * l1_norm(f);
  for (std::uint64_t m = 0; m < count; ++m) {
    const FieldElement xi = element_from_index(m, -k, n, q);
    Complex sum{};
    for (const auto& [h, v] : f.cells()) sum += v * root(field, sign * field.pairing_digit(xi, h));
    sum *= measure;
    if (std::abs(sum) > tol) out.set(xi, snap(sum, tol));
  }
  return out;
}

StepFunction fast(const StepFunction& f, int sign) {
  const auto& field = f.field();
  const std::uint32_t q = field.q();
  const int k = f.resolution();
  const int l = f.support_exponent();
  StepFunction out(f.field_ptr(), -l);
  if (f.is_zero()) return out;
  const int n = k - l;
  const std::uint64_t count = checked_pow(q, static_cast<unsigned>(n));

  std::vector<Complex> data(count);
  for (const auto& [h, v] : f.cells()) data[index_from_element(h, l, n, q)] = v;

  std::vector<Complex> kernel(static_cast<std::size_t>(q) * q);
  for (std::uint32_t b = 0; b < q; ++b)
    for (std::uint32_t a = 0; a < q; ++a)
      kernel[b * q + a] = root(field, sign * field.unit_digit(field.gf_mul(GFScalar{a}, GFScalar{b})));

  std::vector<Complex> column(q);
  std::uint64_t stride = 1;
  for (int axis = 0; axis < n; ++axis) {
    const std::uint64_t span = stride * q;
    for (std::uint64_t start = 0; start < count; start += span) {
      for (std::uint64_t off = 0; off < stride; ++off) {
        for (std::uint32_t a = 0; a < q; ++a) column[a] = data[start + off + a * stride];
        for (std::uint32_t b = 0; b < q; ++b) {
          Complex acc{};
          for (std::uint32_t a = 0; a < q; ++a) acc += kernel[b * q + a] * column[a];
          data[start + off + b * stride] = acc;
        }
      }
    }
    stride = span;
  }

  // Input digit i (exponent l + i) pairs with the output exponent -1 - l - i,
  // which is digit n - 1 - i of the output index.
  const double measure = std::pow(static_cast<double>(q), -k);
  const double tol = kCancelTol * l1_norm(f);
  for (std::uint64_t m = 0; m < count; ++m) {
    const Complex v = data[m] * measure;
    if (std::abs(v) <= tol) continue;
    std::uint64_t rest = m;
    std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      coeffs[static_cast<std::size_t>(n - 1 - i)] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    out.set(FieldElement::from_coefficients(-k, std::move(coeffs)), snap(v, tol));
  }
  return out;
}

}  // namespace

StepFunction transform(const StepFunction& f) { return naive(f, -1); }
StepFunction inverse_transform(const StepFunction& g) { return naive(g, +1); }
StepFunction fast_transform(const StepFunction& f) { return fast(f, -1); }
StepFunction fast_inverse_transform(const StepFunction& g) { return fast(g, +1); }

Complex fourier_coefficient(const PeriodicStepFunction& f, std::uint64_t n) {
  const auto& field = f.field();
  const FieldElement u = field.uindex(n);
  // a character finer than the cells integrates to zero on each of them
  if (!u.is_zero() && -u.valuation() > f.resolution()) return {};
  Complex sum{};
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == Complex{}) continue;
    sum += f[i] * root(field, -field.pairing_digit(u, f.representative(i)));
  }
  return sum / static_cast<double>(f.size());
}

PeriodicStepFunction character_on_ring(std::shared_ptr<const LocalField> field, std::uint64_t n, int k) {
  const FieldElement u = field->uindex(n);
  const int resolution = std::max(k, u.is_zero() ? 0 : -u.valuation());
  PeriodicStepFunction out(field, resolution);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = chi_xi(u, out.representative(i), *field);
  return out;
}

}  // namespace nuframe
