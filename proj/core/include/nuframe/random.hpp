#pragma once

// Seeded test-function generators. std::mt19937_64 is fully specified by the
// standard; the distributions are not, so doubles are formed by hand to keep
// suites identical across standard libraries.

#include <cstdint>
#include <random>

#include "nuframe/stepfn.hpp"

namespace nuframe {

class SuiteRng {
 public:
  explicit SuiteRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }
  Complex complex() {
    const double re = symmetric();
    return {re, symmetric()};
  }
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

/// Every cell of B^support at `resolution` gets an independent complex value.
StepFunction random_step(SuiteRng& rng, std::shared_ptr<const LocalField> field, int resolution, int support = 0);

/// Dense random table on D at `resolution`.
PeriodicStepFunction random_periodic(SuiteRng& rng, std::shared_ptr<const LocalField> field, int resolution);

}  // namespace nuframe
