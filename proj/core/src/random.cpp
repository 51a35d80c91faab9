#include "nuframe/random.hpp"

#include "nuframe/errors.hpp"

namespace nuframe {

StepFunction random_step(SuiteRng& rng, std::shared_ptr<const LocalField> field, int resolution, int support) {
  if (support > resolution) throw ResolutionError("support ball finer than the resolution");
  const std::uint32_t q = field->q();
  const int n = resolution - support;
  const std::uint64_t count = checked_pow(q, static_cast<unsigned>(n));
  StepFunction f(field, resolution);
  for (std::uint64_t m = 0; m < count; ++m) {
    std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(n));
    std::uint64_t rest = m;
    for (auto& d : coeffs) {
      d = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    f.set(FieldElement::from_coefficients(support, std::move(coeffs)), rng.complex());
  }
  return f;
}

PeriodicStepFunction random_periodic(SuiteRng& rng, std::shared_ptr<const LocalField> field, int resolution) {
  PeriodicStepFunction f(std::move(field), resolution);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = rng.complex();
  return f;
}

}  // namespace nuframe
