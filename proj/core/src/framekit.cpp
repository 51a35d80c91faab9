#include "nuframe/framekit.hpp"

#include <algorithm>
#include <cmath>

#include "nuframe/character.hpp"
#include "nuframe/errors.hpp"
#include "nuframe/harmonic.hpp"

namespace nuframe {

namespace {

constexpr double kCancelTol = 1e-13;
constexpr double kNormalizedTol = 1e-6;
constexpr double kCascadeConverged = 1e-13;

// x -> t * nu^{-1} * x
FieldElement apply_b(const FieldElement& x, const SystemConfig& sys) {
  return sys.field->scale(sys.field->gf_inv(sys.nu), x).shifted(1);
}

// x -> t^{-1} * nu * x
FieldElement apply_b_inverse(const FieldElement& x, const SystemConfig& sys) {
  return sys.field->scale(sys.nu, x).shifted(-1);
}

StepFunction mask_times_composite(const StepFunction& phi_hat, const Mask& m, const SystemConfig& sys) {
  StepFunction composite(phi_hat.field_ptr(), phi_hat.resolution() - 1);
  double peak = 0.0;
  for (const auto& [h, v] : phi_hat.cells()) {
    composite.set(apply_b_inverse(h, sys), v);
    peak = std::max(peak, std::abs(v));
  }
  const int K = mask_resolution(m, sys);
  const int R = std::max(composite.resolution(), K - 1);
  const StepFunction fine = refine(composite, R);
  const PeriodicStepFunction table = mask_cells(m, sys, std::max(K, 0));

  StepFunction out(phi_hat.field_ptr(), R);
  for (const auto& [h, v] : fine.cells()) out.set(h, v * table(apply_b(h, sys)));
  out.prune(kCancelTol * peak);
  return out;
}

void check_normalized(const Mask& m0, const SystemConfig& sys) {
  const Complex at_zero = eval_mask(m0, FieldElement{}, sys);
  if (std::abs(at_zero - 1.0) > kNormalizedTol)
    throw NotNormalized("m0(0) = " + std::to_string(at_zero.real()) + (at_zero.imag() < 0 ? " - " : " + ") +
                        std::to_string(std::abs(at_zero.imag())) + "i, expected 1");
}

}  // namespace

Mask make_mask(std::map<LambdaIndex, Complex> coeffs, const SystemConfig& sys) {
  return Mask{std::move(coeffs), sys.mask_norm_const()};
}

Complex eval_mask(const Mask& m, const FieldElement& xi, const SystemConfig& sys) {
  Complex sum{};
  for (const auto& [idx, a] : m.coeffs) sum += a * std::conj(chi_xi(lambda_element(idx, sys), xi, *sys.field));
  return m.norm_const * sum;
}

int mask_resolution(const Mask& m, const SystemConfig& sys) {
  int K = 0;
  for (const auto& [idx, a] : m.coeffs) {
    if (a == Complex{}) continue;
    const FieldElement lambda = lambda_element(idx, sys);
    if (!lambda.is_zero()) K = std::max(K, -lambda.valuation());
  }
  return K;
}

PeriodicStepFunction mask_cells(const Mask& m, const SystemConfig& sys, std::optional<int> resolution) {
  const int K = mask_resolution(m, sys);
  const int R = resolution.value_or(K);
  if (R < K) throw ResolutionError("mask is not constant on cells of resolution " + std::to_string(R));

  std::vector<std::pair<FieldElement, Complex>> terms;
  for (const auto& [idx, a] : m.coeffs)
    if (a != Complex{}) terms.emplace_back(lambda_element(idx, sys), a);

  PeriodicStepFunction out(sys.field, R);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const FieldElement xi = out.representative(i);
    Complex sum{};
    for (const auto& [lambda, a] : terms) sum += a * root(*sys.field, -sys.field->pairing_digit(lambda, xi));
    out[i] = m.norm_const * sum;
  }
  return out;
}

StepFunction refine_hat(const StepFunction& phi_hat, const Mask& m0, const SystemConfig& sys) {
  return mask_times_composite(phi_hat, m0, sys);
}

StepFunction wavelet_hat(const StepFunction& phi_hat, const Mask& m, const SystemConfig& sys) {
  return mask_times_composite(phi_hat, m, sys);
}

StepFunction wavelet_time(const StepFunction& phi_hat, const Mask& m, const SystemConfig& sys) {
  return fast_inverse_transform(wavelet_hat(phi_hat, m, sys));
}

PartitionCheck check_partition(const StepFunction& phi_hat, const SystemConfig& sys, double tol) {
  const int R = std::max(phi_hat.resolution(), 0);
  const int b = std::min(phi_hat.support_exponent(), 0);
  std::vector<FieldElement> lambdas;
  for (const auto& idx : lambda_in_ball(b, sys)) lambdas.push_back(lambda_element(idx, sys));

  PartitionCheck out{PeriodicStepFunction(sys.field, R), phi_hat(FieldElement{}), 0.0, false};
  for (std::size_t i = 0; i < out.sums.size(); ++i) {
    const FieldElement xi = out.sums.representative(i);
    double sum = 0.0;
    for (const auto& lambda : lambdas) sum += std::norm(phi_hat(sys.field->add(xi, lambda)));
    out.sums[i] = sum;
    out.max_deviation = std::max(out.max_deviation, std::abs(sum - 1.0));
  }
  out.pass = out.max_deviation <= tol && std::abs(out.value_at_zero - 1.0) <= tol;
  return out;
}

SigmaV0 sigma_v0(const StepFunction& phi_hat, const SystemConfig& sys) {
  const PartitionCheck partition = check_partition(phi_hat, sys);
  SigmaV0 out{PeriodicStepFunction(sys.field, partition.sums.resolution()), 0, 0.0};
  for (std::size_t i = 0; i < partition.sums.size(); ++i) {
    if (partition.sums[i].real() > kSupportTolerance) {
      out.indicator[i] = 1.0;
      ++out.cell_count;
    }
  }
  out.fraction = static_cast<double>(out.cell_count) / static_cast<double>(out.indicator.size());
  return out;
}

GramReport uep_gram(const SystemConfig& sys, const SigmaV0* support, double tol) {
  if (sys.shift_set.empty()) throw ConfigError("UEP check needs a non-empty shift set");
  if (sys.masks.empty()) throw ConfigError("UEP check needs at least the refinement mask");

  int R = 0;
  for (const auto& m : sys.masks) R = std::max(R, mask_resolution(m, sys));
  if (support) R = std::max(R, support->indicator.resolution());

  std::vector<PeriodicStepFunction> tables;
  for (const auto& m : sys.masks) tables.push_back(mask_cells(m, sys, R));

  const std::size_t S = sys.shift_set.size();
  GramReport out;
  out.resolution = R;
  out.shifts = S;
  const PeriodicStepFunction grid(sys.field, R);
  std::vector<std::size_t> cell(S);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const FieldElement xi = grid.representative(i);
    if (support && support->indicator(xi) == Complex{}) continue;
    ++out.cells_checked;
    for (std::size_t s = 0; s < S; ++s) cell[s] = grid.cell_index(sys.field->add(xi, sys.shift_set[s]));
    for (std::size_t s = 0; s < S; ++s) {
      for (std::size_t s2 = 0; s2 < S; ++s2) {
        Complex g{};
        for (const auto& table : tables) g += table[cell[s]] * std::conj(table[cell[s2]]);
        out.max_deviation = std::max(out.max_deviation, std::abs(g - (s == s2 ? 1.0 : 0.0)));
      }
    }
  }
  out.pass = out.max_deviation <= tol;
  return out;
}

BesselReport bessel_mask_check(const Mask& m0, const SystemConfig& sys, double tol) {
  if (sys.shift_set.empty()) throw ConfigError("Bessel check needs a non-empty shift set");
  BesselReport out;
  out.resolution = mask_resolution(m0, sys);
  const PeriodicStepFunction table = mask_cells(m0, sys, out.resolution);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const FieldElement xi = table.representative(i);
    double sum = 0.0;
    for (const auto& tau : sys.shift_set) sum += std::norm(table(sys.field->add(xi, tau)));
    out.max_sum = std::max(out.max_sum, sum);
  }
  out.pass = out.max_sum <= 1.0 + tol;
  return out;
}

StepFunction cascade_hat(const Mask& m0, int iterations, const SystemConfig& sys) {
  check_normalized(m0, sys);
  StepFunction phi_hat = StepFunction::indicator(sys.field, 0, FieldElement{});
  for (int i = 0; i < iterations; ++i) phi_hat = refine_hat(phi_hat, m0, sys);
  return phi_hat;
}

StepFunction cascade(const Mask& m0, int iterations, const SystemConfig& sys) {
  return fast_inverse_transform(cascade_hat(m0, iterations, sys));
}

WaveletSystem::WaveletSystem(SystemConfig sys, std::vector<StepFunction> generators)
    : sys_(std::move(sys)), generators_(std::move(generators)) {}

WaveletSystem WaveletSystem::from_masks(SystemConfig sys, int max_iterations) {
  if (sys.masks.empty()) throw ConfigError("system has no refinement mask");
  const Mask& m0 = sys.masks[0];
  StepFunction phi_hat = StepFunction::indicator(sys.field, 0, FieldElement{});
  int iterations = 0;
  bool converged = false;
  while (iterations < max_iterations) {
    StepFunction next = refine_hat(phi_hat, m0, sys);
    ++iterations;
    const double change = max_abs_diff(next, phi_hat);
    phi_hat = std::move(next);
    if (change <= kCascadeConverged) {
      converged = true;
      break;
    }
  }

  std::vector<StepFunction> generators;
  generators.push_back(fast_inverse_transform(phi_hat));
  for (std::size_t ell = 1; ell < sys.masks.size(); ++ell)
    generators.push_back(wavelet_time(phi_hat, sys.masks[ell], sys));

  WaveletSystem ws(std::move(sys), std::move(generators));
  ws.phi_hat_ = std::move(phi_hat);
  ws.iterations_ = iterations;
  ws.converged_ = converged;
  return ws;
}

WaveletSystem WaveletSystem::from_generators(SystemConfig sys, std::vector<StepFunction> generators) {
  if (generators.empty()) throw ConfigError("a system needs at least the scaling function");
  return WaveletSystem(std::move(sys), std::move(generators));
}

StepFunction system_member(std::size_t ell, int j, const LambdaIndex& idx, const WaveletSystem& ws) {
  const auto& sys = ws.config();
  return dilate_steps(translate(ws.generator(ell), lambda_element(idx, sys)), sys, j);
}

std::vector<LambdaIndex> overlapping_indices(const StepFunction& f, std::size_t ell, int j, const WaveletSystem& ws) {
  const StepFunction& g = ws.generator(ell);
  if (f.is_zero() || g.is_zero()) return {};
  return lambda_in_ball(std::min(f.support_exponent() - j, g.support_exponent()), ws.config());
}

std::vector<Coefficient> analysis(const StepFunction& f, const WaveletSystem& ws, int j_begin, int j_end) {
  std::vector<Coefficient> out;
  for (std::size_t ell = 0; ell < ws.generators().size(); ++ell) {
    for (int j = j_begin; j < j_end; ++j) {
      for (const auto& idx : overlapping_indices(f, ell, j, ws)) {
        const Complex c = inner(f, system_member(ell, j, idx, ws));
        if (c != Complex{}) out.push_back({ell, j, idx, c});
      }
    }
  }
  return out;
}

double block_energy(const StepFunction& f, std::size_t ell, int j, const WaveletSystem& ws) {
  double sum = 0.0;
  for (const auto& idx : overlapping_indices(f, ell, j, ws)) sum += std::norm(inner(f, system_member(ell, j, idx, ws)));
  return sum;
}

namespace {

// sum_lambda <f, g_lambda> g_lambda over one (ell, j) block.
StepFunction block_projection(const StepFunction& f, std::size_t ell, int j, const WaveletSystem& ws) {
  StepFunction out(f.field_ptr(), ws.generator(ell).resolution() + j);
  for (const auto& idx : overlapping_indices(f, ell, j, ws)) {
    const StepFunction member = system_member(ell, j, idx, ws);
    const Complex c = inner(f, member);
    if (c == Complex{}) continue;
    for (const auto& [h, v] : member.cells()) out.accumulate(h, c * v);
  }
  return out;
}

}  // namespace

TwoScaleResult two_scale_check(const StepFunction& f, int j, const WaveletSystem& ws) {
  TwoScaleResult out;
  out.lhs = block_energy(f, 0, j + 1, ws);
  out.rhs = block_energy(f, 0, j, ws);
  for (std::size_t ell = 1; ell < ws.generators().size(); ++ell) out.rhs += block_energy(f, ell, j, ws);
  out.residual = std::abs(out.lhs - out.rhs);

  Complex lhs_op = inner(block_projection(f, 0, j + 1, ws), f);
  Complex rhs_op = inner(block_projection(f, 0, j, ws), f);
  for (std::size_t ell = 1; ell < ws.generators().size(); ++ell) rhs_op += inner(block_projection(f, ell, j, ws), f);
  out.operator_residual = std::abs(rhs_op - lhs_op);
  return out;
}

double frame_ratio(const StepFunction& f, const WaveletSystem& ws, int j0, int j1) {
  const double energy = squared_norm(f);
  if (f.is_zero() || energy == 0.0) throw DegenerateInput("frame ratio of the zero function");
  double sum = block_energy(f, 0, j0, ws);
  for (std::size_t ell = 1; ell < ws.generators().size(); ++ell)
    for (int j = j0; j < j1; ++j) sum += block_energy(f, ell, j, ws);
  return sum / energy;
}

}  // namespace nuframe
