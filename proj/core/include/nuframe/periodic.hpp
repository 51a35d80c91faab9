#pragma once

// Periodization onto D and the periodic wavelet system on L^2(D).
//
// f^per(x) = sum_r f(x + u(r)), the sum over the Z-lattice. Members are
// labelled by integers 0 <= label < (qN)^j and mapped to Lambda through
// label_to_index.

#include <cstdint>
#include <optional>
#include <vector>

#include "nuframe/framekit.hpp"

namespace nuframe {

PeriodicStepFunction periodize(const StepFunction& f);

class PeriodicSystem {
 public:
  /// Periodizes every member with j <= j_max up front.
  PeriodicSystem(WaveletSystem ws, int j_max);

  const WaveletSystem& wavelet_system() const { return ws_; }
  const SystemConfig& config() const { return ws_.config(); }
  int j_max() const { return j_max_; }
  std::size_t generator_count() const { return ws_.generators().size(); }
  std::uint64_t label_count(int j) const;

  /// periodize(system_member(ell, j, label_to_index(label))). Throws IndexError
  /// for ell, j or label out of range.
  const PeriodicStepFunction& member(std::size_t ell, int j, std::uint64_t label) const;

 private:
  WaveletSystem ws_;
  int j_max_;
  // members_[ell][j][label]
  std::vector<std::vector<std::vector<PeriodicStepFunction>>> members_;
};

/// sum_label |<f, member(ell, j, label)>|^2.
double periodic_block_energy(const PeriodicStepFunction& f, std::size_t ell, int j, const PeriodicSystem& ps);

struct ScalingEnergyScan {
  /// Smallest J such that (1 - eps) ||f||^2 <= S_j <= (1 + eps) ||f||^2 for all J <= j <= j_max.
  std::optional<int> J;
  std::vector<double> sums;  // S_j for j = 0..j_max
  double norm2 = 0.0;        // ||f||^2
};

/// Throws DegenerateInput for f == 0 and ConfigError for eps <= 0.
ScalingEnergyScan scaling_energy_scan(const PeriodicStepFunction& f, double eps, const PeriodicSystem& ps);

struct PeriodicTwoScale {
  double lhs = 0.0;  // S_{j+1}
  double rhs = 0.0;  // S_j + sum_l sum_label |<f, psi^per_{l,j,label}>|^2
  double residual = 0.0;
};

/// Needs j + 1 <= j_max (IndexError otherwise).
PeriodicTwoScale periodic_two_scale_check(const PeriodicStepFunction& f, int j, const PeriodicSystem& ps);

struct PeriodicFrame {
  double total = 0.0;  // |<f, phi^per>|^2 + sum_{l, r < j_max, label} |<f, psi^per_{l,r,label}>|^2
  double norm2 = 0.0;  // ||f||^2
  double residual = 0.0;
  /// Wavelet energy at the first omitted scale r = j_max.
  double tail = 0.0;
  /// |S_{j_max} - ||f||^2|
  double limit_defect = 0.0;
};

/// Throws TruncationError when j_max is below the resolution of f.
PeriodicFrame periodic_frame_check(const PeriodicStepFunction& f, const PeriodicSystem& ps);

}  // namespace nuframe
