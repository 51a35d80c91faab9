#include "nuframe/periodic.hpp"

#include <algorithm>
#include <cmath>

#include "nuframe/errors.hpp"

namespace nuframe {

PeriodicStepFunction periodize(const StepFunction& f) {
  PeriodicStepFunction out(f.field_ptr(), std::max(f.resolution(), 0));
  // A cell h + B^k folds onto the cell of its non-negative part; cells coarser
  // than D cover q^{-k} copies of D each.
  if (f.resolution() < 0) {
    const double copies = std::pow(static_cast<double>(f.field().q()), -f.resolution());
    for (const auto& [h, v] : f.cells()) out[0] += copies * v;
    return out;
  }
  for (const auto& [h, v] : f.cells()) out[out.cell_index(h)] += v;
  return out;
}

PeriodicSystem::PeriodicSystem(WaveletSystem ws, int j_max) : ws_(std::move(ws)), j_max_(j_max) {
  if (j_max < 0) throw ConfigError("j_max must be non-negative");
  members_.resize(ws_.generators().size());
  for (std::size_t ell = 0; ell < members_.size(); ++ell) {
    members_[ell].resize(static_cast<std::size_t>(j_max) + 1);
    for (int j = 0; j <= j_max; ++j) {
      const std::uint64_t count = label_count(j);
      auto& block = members_[ell][static_cast<std::size_t>(j)];
      block.reserve(count);
      for (std::uint64_t label = 0; label < count; ++label)
        block.push_back(periodize(system_member(ell, j, label_to_index(label, ws_.config()), ws_)));
    }
  }
}

std::uint64_t PeriodicSystem::label_count(int j) const {
  return checked_pow(static_cast<std::uint64_t>(config().qN()), static_cast<unsigned>(j));
}

const PeriodicStepFunction& PeriodicSystem::member(std::size_t ell, int j, std::uint64_t label) const {
  if (ell >= members_.size()) throw IndexError("generator index " + std::to_string(ell) + " out of range");
  if (j < 0 || j > j_max_) throw IndexError("scale " + std::to_string(j) + " outside [0, j_max]");
  const auto& block = members_[ell][static_cast<std::size_t>(j)];
  if (label >= block.size()) throw IndexError("label " + std::to_string(label) + " out of range at scale " + std::to_string(j));
  return block[label];
}

double periodic_block_energy(const PeriodicStepFunction& f, std::size_t ell, int j, const PeriodicSystem& ps) {
  double sum = 0.0;
  const std::uint64_t count = ps.label_count(j);
  for (std::uint64_t label = 0; label < count; ++label) sum += std::norm(inner(f, ps.member(ell, j, label)));
  return sum;
}

ScalingEnergyScan scaling_energy_scan(const PeriodicStepFunction& f, double eps, const PeriodicSystem& ps) {
  if (!(eps > 0.0)) throw ConfigError("epsilon must be positive");
  ScalingEnergyScan out;
  out.norm2 = squared_norm(f);
  if (out.norm2 == 0.0) throw DegenerateInput("energy scan of the zero function");
  for (int j = 0; j <= ps.j_max(); ++j) out.sums.push_back(periodic_block_energy(f, 0, j, ps));
  for (int j = ps.j_max(); j >= 0; --j) {
    const double s = out.sums[static_cast<std::size_t>(j)];
    if (s < (1.0 - eps) * out.norm2 || s > (1.0 + eps) * out.norm2) break;
    out.J = j;
  }
  return out;
}

PeriodicTwoScale periodic_two_scale_check(const PeriodicStepFunction& f, int j, const PeriodicSystem& ps) {
  if (j < 0 || j + 1 > ps.j_max()) throw IndexError("two-scale check at j = " + std::to_string(j) + " needs j + 1 <= j_max");
  PeriodicTwoScale out;
  out.lhs = periodic_block_energy(f, 0, j + 1, ps);
  out.rhs = periodic_block_energy(f, 0, j, ps);
  for (std::size_t ell = 1; ell < ps.generator_count(); ++ell) out.rhs += periodic_block_energy(f, ell, j, ps);
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

PeriodicFrame periodic_frame_check(const PeriodicStepFunction& f, const PeriodicSystem& ps) {
  if (ps.j_max() < f.resolution())
    throw TruncationError("j_max = " + std::to_string(ps.j_max()) + " is below the input resolution " +
                          std::to_string(f.resolution()));
  PeriodicFrame out;
  out.norm2 = squared_norm(f);
  out.total = periodic_block_energy(f, 0, 0, ps);
  for (std::size_t ell = 1; ell < ps.generator_count(); ++ell) {
    for (int r = 0; r < ps.j_max(); ++r) out.total += periodic_block_energy(f, ell, r, ps);
    out.tail += periodic_block_energy(f, ell, ps.j_max(), ps);
  }
  out.residual = std::abs(out.total - out.norm2);
  out.limit_defect = std::abs(periodic_block_energy(f, 0, ps.j_max(), ps) - out.norm2);
  return out;
}

}  // namespace nuframe
