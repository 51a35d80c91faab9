#pragma once

// Test-function space: finite linear combinations of ball indicators.
//
// A StepFunction stores one resolution k and a sparse table from canonical
// coset representatives of B^k (exponents < k) to amplitudes. Haar measure is
// normalized so that |D| = 1, hence every cell has measure q^{-k}. All
// operations return new values; inputs are never modified.

#include <complex>
#include <map>
#include <memory>
#include <vector>

#include "nuframe/algebra.hpp"
#include "nuframe/system.hpp"

namespace nuframe {

class StepFunction {
 public:
  using CellMap = std::map<FieldElement, Complex>;

  StepFunction(std::shared_ptr<const LocalField> field, int resolution);

  /// 1 on h + B^k.
  static StepFunction indicator(std::shared_ptr<const LocalField> field, int k, const FieldElement& h);

  const LocalField& field() const { return *field_; }
  const std::shared_ptr<const LocalField>& field_ptr() const { return field_; }
  int resolution() const { return resolution_; }
  const CellMap& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool is_zero() const { return cells_.empty(); }

  /// Value at an arbitrary point.
  Complex operator()(const FieldElement& x) const;

  /// Adds v on the cell containing x. A cell whose value becomes exactly zero is erased.
  void accumulate(const FieldElement& x, Complex v);
  void set(const FieldElement& x, Complex v);
  /// Erases cells with |v| <= tol.
  void prune(double tol);

  /// Smallest b <= resolution() with supp f inside B^b (resolution() for f == 0).
  int support_exponent() const;

 private:
  std::shared_ptr<const LocalField> field_;
  int resolution_;
  CellMap cells_;
};

enum class Direction { fine, coarse };

/// f(x - a).
StepFunction translate(const StepFunction& f, const FieldElement& a);
/// chi(b x) f(x), refined until the character is constant on cells.
StepFunction modulate(const StepFunction& f, const FieldElement& b);
/// Fine: s * f(t^{-1} nu x), resolution k -> k + 1. Coarse is the exact inverse.
/// s = sqrt(qN) in paper mode, sqrt(q) in unitary mode.
StepFunction dilate(const StepFunction& f, const SystemConfig& sys, Direction direction);
/// steps > 0 applies the fine dilation `steps` times, steps < 0 the coarse one.
StepFunction dilate_steps(const StepFunction& f, const SystemConfig& sys, int steps);

/// Each cell split into q^{k'-k} equal subcells. Throws ResolutionError if k' < k.
StepFunction refine(const StepFunction& f, int resolution);

Complex inner(const StepFunction& f, const StepFunction& g);
double squared_norm(const StepFunction& f);
double norm2(const StepFunction& f);
double l1_norm(const StepFunction& f);
/// sup |f - g| over the common refinement.
double max_abs_diff(const StepFunction& f, const StepFunction& g);

StepFunction operator+(const StepFunction& f, const StepFunction& g);
StepFunction operator-(const StepFunction& f, const StepFunction& g);
StepFunction operator*(Complex a, const StepFunction& f);

/// A function on D, stored densely: q^k cells at resolution k >= 0. Cell
/// index i = sum_e h_e q^e for the representative h = sum_{e<k} h_e t^e, so
/// the low digits of i address the coarser cells.
class PeriodicStepFunction {
 public:
  PeriodicStepFunction(std::shared_ptr<const LocalField> field, int resolution);
  PeriodicStepFunction(std::shared_ptr<const LocalField> field, int resolution, std::vector<Complex> values);

  /// Restriction of f to D.
  static PeriodicStepFunction restrict_to_ring(const StepFunction& f);

  const LocalField& field() const { return *field_; }
  const std::shared_ptr<const LocalField>& field_ptr() const { return field_; }
  int resolution() const { return resolution_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Complex>& values() const { return values_; }
  Complex& operator[](std::size_t i) { return values_[i]; }
  const Complex& operator[](std::size_t i) const { return values_[i]; }

  FieldElement representative(std::size_t index) const;
  /// Cell of x + Z; the negative-exponent part of x is folded away.
  std::size_t cell_index(const FieldElement& x) const;
  Complex operator()(const FieldElement& x) const { return values_[cell_index(x)]; }

  /// Equal to this function on D and zero elsewhere.
  StepFunction unfold() const;

 private:
  std::shared_ptr<const LocalField> field_;
  int resolution_;
  std::vector<Complex> values_;
};

/// Periodic translation by a, wrapping around D through x -> x + a mod Z.
PeriodicStepFunction translate(const PeriodicStepFunction& f, const FieldElement& a);
PeriodicStepFunction refine(const PeriodicStepFunction& f, int resolution);
Complex inner(const PeriodicStepFunction& f, const PeriodicStepFunction& g);
double squared_norm(const PeriodicStepFunction& f);
double norm2(const PeriodicStepFunction& f);
double l1_norm(const PeriodicStepFunction& f);
double max_abs_diff(const PeriodicStepFunction& f, const PeriodicStepFunction& g);

}  // namespace nuframe
