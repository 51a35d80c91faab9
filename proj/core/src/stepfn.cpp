#include "nuframe/stepfn.hpp"

#include <algorithm>
#include <cmath>

#include "nuframe/character.hpp"
#include "nuframe/errors.hpp"

namespace nuframe {

namespace {

double cell_measure(const LocalField& field, int k) { return std::pow(static_cast<double>(field.q()), -k); }

// h + sum_i digit_i(m) t^{k+i}, i < depth: the m-th subcell of h + B^k at resolution k + depth.
FieldElement subcell(const FieldElement& h, int k, std::uint64_t m, int depth, std::uint32_t q) {
  const int lo = h.is_zero() ? k : std::min(h.valuation(), k);
  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(k + depth - lo), 0);
  for (int e = lo; e < k; ++e) coeffs[static_cast<std::size_t>(e - lo)] = h.coefficient(e).index();
  for (int i = 0; i < depth; ++i) {
    coeffs[static_cast<std::size_t>(k + i - lo)] = static_cast<std::uint32_t>(m % q);
    m /= q;
  }
  return FieldElement::from_coefficients(lo, std::move(coeffs));
}

GFScalar scalar_power(const LocalField& field, GFScalar a, int exp) {
  GFScalar base = exp < 0 ? field.gf_inv(a) : a;
  GFScalar out{1};
  for (int i = 0; i < std::abs(exp); ++i) out = field.gf_mul(out, base);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// StepFunction

StepFunction::StepFunction(std::shared_ptr<const LocalField> field, int resolution)
    : field_(std::move(field)), resolution_(resolution) {}

StepFunction StepFunction::indicator(std::shared_ptr<const LocalField> field, int k, const FieldElement& h) {
  StepFunction f(std::move(field), k);
  f.set(h, 1.0);
  return f;
}

Complex StepFunction::operator()(const FieldElement& x) const {
  const auto it = cells_.find(x.below(resolution_));
  return it == cells_.end() ? Complex{} : it->second;
}

void StepFunction::accumulate(const FieldElement& x, Complex v) {
  if (v == Complex{}) return;
  auto [it, inserted] = cells_.try_emplace(x.below(resolution_), v);
  if (!inserted) {
    it->second += v;
    if (it->second == Complex{}) cells_.erase(it);
  }
}

void StepFunction::set(const FieldElement& x, Complex v) {
  const FieldElement rep = x.below(resolution_);
  if (v == Complex{})
    cells_.erase(rep);
  else
    cells_[rep] = v;
}

void StepFunction::prune(double tol) {
  std::erase_if(cells_, [tol](const auto& cell) { return std::abs(cell.second) <= tol; });
}

int StepFunction::support_exponent() const {
  int b = resolution_;
  for (const auto& [rep, v] : cells_)
    if (!rep.is_zero()) b = std::min(b, rep.valuation());
  return b;
}

StepFunction translate(const StepFunction& f, const FieldElement& a) {
  StepFunction g(f.field_ptr(), f.resolution());
  const auto& field = f.field();
  for (const auto& [h, v] : f.cells()) g.set(field.add(h, a), v);
  return g;
}

StepFunction modulate(const StepFunction& f, const FieldElement& b) {
  if (b.is_zero() || f.is_zero()) return f;
  const int k = std::max(f.resolution(), -b.valuation());
  StepFunction g = refine(f, k);
  StepFunction out(f.field_ptr(), k);
  for (const auto& [h, v] : g.cells()) out.set(h, v * chi_xi(b, h, f.field()));
  return out;
}

StepFunction dilate_steps(const StepFunction& f, const SystemConfig& sys, int steps) {
  if (steps == 0) return f;
  const auto& field = f.field();
  const GFScalar factor = scalar_power(field, sys.nu, -steps);
  const double amplitude = std::pow(sys.dilation_factor(), steps);
  StepFunction g(f.field_ptr(), f.resolution() + steps);
  for (const auto& [h, v] : f.cells()) g.set(field.scale(factor, h).shifted(steps), amplitude * v);
  return g;
}

StepFunction dilate(const StepFunction& f, const SystemConfig& sys, Direction direction) {
  return dilate_steps(f, sys, direction == Direction::fine ? 1 : -1);
}

StepFunction refine(const StepFunction& f, int resolution) {
  if (resolution < f.resolution())
    throw ResolutionError("cannot refine from resolution " + std::to_string(f.resolution()) + " down to " +
                          std::to_string(resolution));
  if (resolution == f.resolution()) return f;
  const int depth = resolution - f.resolution();
  const std::uint32_t q = f.field().q();
  const std::uint64_t count = checked_pow(q, static_cast<unsigned>(depth));
  StepFunction g(f.field_ptr(), resolution);
  for (const auto& [h, v] : f.cells())
    for (std::uint64_t m = 0; m < count; ++m) g.set(subcell(h, f.resolution(), m, depth, q), v);
  return g;
}

Complex inner(const StepFunction& f, const StepFunction& g) {
  Complex sum{};
  if (f.resolution() >= g.resolution()) {
    for (const auto& [h, v] : f.cells()) {
      const Complex w = g(h);
      if (w != Complex{}) sum += v * std::conj(w);
    }
    return sum * cell_measure(f.field(), f.resolution());
  }
  for (const auto& [h, w] : g.cells()) {
    const Complex v = f(h);
    if (v != Complex{}) sum += v * std::conj(w);
  }
  return sum * cell_measure(f.field(), g.resolution());
}

double squared_norm(const StepFunction& f) {
  double sum = 0.0;
  for (const auto& [h, v] : f.cells()) sum += std::norm(v);
  return sum * cell_measure(f.field(), f.resolution());
}

double norm2(const StepFunction& f) { return std::sqrt(squared_norm(f)); }

double l1_norm(const StepFunction& f) {
  double sum = 0.0;
  for (const auto& [h, v] : f.cells()) sum += std::abs(v);
  return sum * cell_measure(f.field(), f.resolution());
}

double max_abs_diff(const StepFunction& f, const StepFunction& g) {
  const int k = std::max(f.resolution(), g.resolution());
  const StepFunction d = refine(f, k) - refine(g, k);
  double worst = 0.0;
  for (const auto& [h, v] : d.cells()) worst = std::max(worst, std::abs(v));
  return worst;
}

StepFunction operator+(const StepFunction& f, const StepFunction& g) {
  const int k = std::max(f.resolution(), g.resolution());
  StepFunction out = refine(f, k);
  const StepFunction fine = refine(g, k);
  for (const auto& [h, v] : fine.cells()) out.accumulate(h, v);
  return out;
}

StepFunction operator-(const StepFunction& f, const StepFunction& g) { return f + Complex{-1.0} * g; }

StepFunction operator*(Complex a, const StepFunction& f) {
  StepFunction out(f.field_ptr(), f.resolution());
  if (a == Complex{}) return out;
  for (const auto& [h, v] : f.cells()) out.set(h, a * v);
  return out;
}

// ---------------------------------------------------------------------------
// PeriodicStepFunction

PeriodicStepFunction::PeriodicStepFunction(std::shared_ptr<const LocalField> field, int resolution)
    : field_(std::move(field)), resolution_(resolution) {
  if (resolution < 0) throw ResolutionError("periodic step functions need resolution >= 0");
  values_.assign(checked_pow(field_->q(), static_cast<unsigned>(resolution)), Complex{});
}

PeriodicStepFunction::PeriodicStepFunction(std::shared_ptr<const LocalField> field, int resolution,
                                           std::vector<Complex> values)
    : PeriodicStepFunction(std::move(field), resolution) {
  if (values.size() != values_.size()) throw ResolutionError("periodic table must have exactly q^k cells");
  values_ = std::move(values);
}

PeriodicStepFunction PeriodicStepFunction::restrict_to_ring(const StepFunction& f) {
  const int k = std::max(f.resolution(), 0);
  PeriodicStepFunction out(f.field_ptr(), k);
  if (f.resolution() <= 0) {
    out.values_[0] = f(FieldElement{});
    return out;
  }
  for (const auto& [h, v] : f.cells())
    if (h.is_zero() || h.valuation() >= 0) out.values_[out.cell_index(h)] = v;
  return out;
}

FieldElement PeriodicStepFunction::representative(std::size_t index) const {
  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(resolution_));
  for (auto& d : coeffs) {
    d = static_cast<std::uint32_t>(index % field_->q());
    index /= field_->q();
  }
  return FieldElement::from_coefficients(0, std::move(coeffs));
}

std::size_t PeriodicStepFunction::cell_index(const FieldElement& x) const {
  std::size_t index = 0;
  for (int e = resolution_ - 1; e >= 0; --e) index = index * field_->q() + x.coefficient(e).index();
  return index;
}

StepFunction PeriodicStepFunction::unfold() const {
  StepFunction f(field_, resolution_);
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != Complex{}) f.set(representative(i), values_[i]);
  return f;
}

PeriodicStepFunction translate(const PeriodicStepFunction& f, const FieldElement& a) {
  PeriodicStepFunction g(f.field_ptr(), f.resolution());
  const auto& field = f.field();
  for (std::size_t i = 0; i < f.size(); ++i) g[g.cell_index(field.add(f.representative(i), a))] = f[i];
  return g;
}

PeriodicStepFunction refine(const PeriodicStepFunction& f, int resolution) {
  if (resolution < f.resolution()) throw ResolutionError("cannot refine a periodic function to a coarser grid");
  PeriodicStepFunction g(f.field_ptr(), resolution);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = f[i % f.size()];
  return g;
}

Complex inner(const PeriodicStepFunction& f, const PeriodicStepFunction& g) {
  const std::size_t n = std::max(f.size(), g.size());
  Complex sum{};
  for (std::size_t i = 0; i < n; ++i) sum += f[i % f.size()] * std::conj(g[i % g.size()]);
  return sum / static_cast<double>(n);
}

double squared_norm(const PeriodicStepFunction& f) {
  double sum = 0.0;
  for (const auto& v : f.values()) sum += std::norm(v);
  return sum / static_cast<double>(f.size());
}

double norm2(const PeriodicStepFunction& f) { return std::sqrt(squared_norm(f)); }

double l1_norm(const PeriodicStepFunction& f) {
  double sum = 0.0;
  for (const auto& v : f.values()) sum += std::abs(v);
  return sum / static_cast<double>(f.size());
}

double max_abs_diff(const PeriodicStepFunction& f, const PeriodicStepFunction& g) {
  const std::size_t n = std::max(f.size(), g.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(f[i % f.size()] - g[i % g.size()]));
  return worst;
}

}  // namespace nuframe
