#pragma once

// Masks, refinement, the UEP verifier and exact frame-coefficient analysis.
//
// Frequency-side scaling is xi -> B xi with B = t * nu^{-1}; the time-side
// dilation is its inverse A = t^{-1} * nu. Masks are Z-periodic and locally
// constant on cosets of B^K, so every check below is an exact finite sum over
// the cells of D at the appropriate resolution.

#include <cstddef>
#include <optional>
#include <vector>

#include "nuframe/stepfn.hpp"
#include "nuframe/system.hpp"

namespace nuframe {

inline constexpr double kGramTolerance = 1e-10;
inline constexpr double kIdentityTolerance = 1e-9;
inline constexpr double kSupportTolerance = 1e-12;

/// Mask with the system's normalization constant.
Mask make_mask(std::map<LambdaIndex, Complex> coeffs, const SystemConfig& sys);

Complex eval_mask(const Mask& m, const FieldElement& xi, const SystemConfig& sys);
/// Smallest K >= 0 such that m is constant on cosets of B^K.
int mask_resolution(const Mask& m, const SystemConfig& sys);
/// Values of m on the cells of D at `resolution` (default: mask_resolution).
PeriodicStepFunction mask_cells(const Mask& m, const SystemConfig& sys, std::optional<int> resolution = std::nullopt);

/// xi -> m0(B xi) * phi_hat(B xi).
StepFunction refine_hat(const StepFunction& phi_hat, const Mask& m0, const SystemConfig& sys);
/// xi -> m(B xi) * phi_hat(B xi).
StepFunction wavelet_hat(const StepFunction& phi_hat, const Mask& m, const SystemConfig& sys);
StepFunction wavelet_time(const StepFunction& phi_hat, const Mask& m, const SystemConfig& sys);

struct PartitionCheck {
  /// sum_lambda |phi_hat(xi + lambda)|^2 on the cells of D.
  PeriodicStepFunction sums;
  Complex value_at_zero;
  double max_deviation = 0.0;  // max |sum - 1|
  bool pass = false;
};

PartitionCheck check_partition(const StepFunction& phi_hat, const SystemConfig& sys,
                               double tol = kGramTolerance);

struct SigmaV0 {
  /// 1 on cells where the partition sum exceeds kSupportTolerance, else 0.
  PeriodicStepFunction indicator;
  std::size_t cell_count = 0;
  double fraction = 0.0;  // Haar measure inside D
};

SigmaV0 sigma_v0(const StepFunction& phi_hat, const SystemConfig& sys);

struct GramReport {
  double max_deviation = 0.0;  // max over cells and shift pairs of |G - I|
  bool pass = false;
  int resolution = 0;
  std::size_t cells_checked = 0;
  std::size_t shifts = 0;
};

/// G_{s,s'}(xi) = sum_l m_l(xi + tau_s) conj(m_l(xi + tau_s')) on every cell of
/// `support` (all of D when null). Throws ConfigError for an empty shift set.
GramReport uep_gram(const SystemConfig& sys, const SigmaV0* support = nullptr, double tol = kGramTolerance);

struct BesselReport {
  double max_sum = 0.0;  // max over cells of sum_s |m0(xi + tau_s)|^2
  bool pass = false;
  int resolution = 0;
};

BesselReport bessel_mask_check(const Mask& m0, const SystemConfig& sys, double tol = kGramTolerance);

/// Frequency-side cascade from 1_D. Throws NotNormalized if |m0(0) - 1| > 1e-6.
StepFunction cascade_hat(const Mask& m0, int iterations, const SystemConfig& sys);
/// Time side of cascade_hat.
StepFunction cascade(const Mask& m0, int iterations, const SystemConfig& sys);

/// A system together with its generator tables (index 0 = phi, 1..L = psi_l).
class WaveletSystem {
 public:
  /// Builds phi_hat by cascading from 1_D until two iterates agree (or
  /// max_iterations is reached), then psi_hat_l = m_l(B.) phi_hat(B.).
  /// Unlike cascade(), a non-normalized m0 is accepted and reported.
  static WaveletSystem from_masks(SystemConfig sys, int max_iterations = 8);
  /// Generators given directly on the time side.
  static WaveletSystem from_generators(SystemConfig sys, std::vector<StepFunction> generators);

  const SystemConfig& config() const { return sys_; }
  const StepFunction& generator(std::size_t ell) const { return generators_.at(ell); }
  const std::vector<StepFunction>& generators() const { return generators_; }
  std::size_t wavelet_count() const { return generators_.size() - 1; }
  /// Frequency side of phi (empty when built from generators without masks).
  const std::optional<StepFunction>& phi_hat() const { return phi_hat_; }
  int cascade_iterations() const { return iterations_; }
  bool cascade_converged() const { return converged_; }

 private:
  WaveletSystem(SystemConfig sys, std::vector<StepFunction> generators);

  SystemConfig sys_;
  std::vector<StepFunction> generators_;
  std::optional<StepFunction> phi_hat_;
  int iterations_ = 0;
  bool converged_ = true;
};

/// w_j * psi_ell(A^j x - lambda), w_j = (qN)^{j/2} (paper) or q^{j/2} (unitary).
StepFunction system_member(std::size_t ell, int j, const LambdaIndex& idx, const WaveletSystem& ws);

/// Indices whose member can meet supp f: a ball enumeration that contains
/// every lambda with a nonzero coefficient.
std::vector<LambdaIndex> overlapping_indices(const StepFunction& f, std::size_t ell, int j, const WaveletSystem& ws);

struct Coefficient {
  std::size_t ell = 0;
  int j = 0;
  LambdaIndex idx;
  Complex value;
};

/// All nonzero <f, psi_{ell,j,lambda}> for ell in [0, L] and j_begin <= j < j_end.
/// ell == 0 refers to phi.
std::vector<Coefficient> analysis(const StepFunction& f, const WaveletSystem& ws, int j_begin, int j_end);

/// Sum of |c|^2 over the coefficients of one (ell, j) block.
double block_energy(const StepFunction& f, std::size_t ell, int j, const WaveletSystem& ws);

struct TwoScaleResult {
  double lhs = 0.0;       // sum |<f, phi_{j+1,lambda}>|^2
  double rhs = 0.0;       // sum |<f, phi_{j,lambda}>|^2 + sum_l sum |<f, psi_{l,j,lambda}>|^2
  double residual = 0.0;  // |lhs - rhs|
  /// |<P_j f, f> + <Q_j f, f> - <P_{j+1} f, f>| with the projections materialized.
  double operator_residual = 0.0;
};

TwoScaleResult two_scale_check(const StepFunction& f, int j, const WaveletSystem& ws);

/// (sum |<f, phi_{j0,.}>|^2 + sum_{l>=1, j0<=j<j1} sum |<f, psi_{l,j,.}>|^2) / ||f||^2.
/// Throws DegenerateInput for f == 0.
double frame_ratio(const StepFunction& f, const WaveletSystem& ws, int j0, int j1);

}  // namespace nuframe
