#pragma once

// Dilation/translation parameters of a nonuniform wavelet system and the
// translation set Lambda = {0, theta} + Z, theta = u(r) * nu^{-1}.
//
// In characteristic p the integer N acts through the unit nu (default
// N mod p). Z = {u(n)} is then an additive group containing theta, so the
// offset branch never yields new points: for N > 1 Lambda is carried as the
// multiset Z + (theta + Z), indexed by LambdaIndex, and the degeneracy is
// reported rather than hidden. For N == 1 Lambda is Z itself.

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nuframe/algebra.hpp"

namespace nuframe {

using Complex = std::complex<double>;

enum class Normalization { paper, unitary };

std::string to_string(Normalization mode);
Normalization parse_normalization(const std::string& text);

/// lambda = u(n) + delta * theta.
struct LambdaIndex {
  std::uint64_t n = 0;
  bool delta = false;

  friend auto operator<=>(const LambdaIndex&, const LambdaIndex&) = default;
};

/// Finitely supported character polynomial
/// m(xi) = norm_const * sum_lambda a_lambda * conj(chi(lambda * xi)).
struct Mask {
  std::map<LambdaIndex, Complex> coeffs;
  double norm_const = 1.0;
};

struct SystemConfig {
  std::shared_ptr<const LocalField> field;
  int N = 1;
  int r = 1;
  GFScalar nu{1};
  Normalization normalization = Normalization::unitary;
  /// masks[0] is the refinement mask, masks[1..L] the wavelet masks.
  std::vector<Mask> masks;
  /// Shifts tau_s used by the UEP Gram and the Bessel sum.
  std::vector<FieldElement> shift_set;

  int qN() const { return static_cast<int>(field->q()) * N; }
  bool has_offset_branch() const { return N > 1; }
  FieldElement theta() const;
  /// Amplitude of one fine dilation step: sqrt(qN) (paper) or sqrt(q) (unitary).
  double dilation_factor() const;
  /// Mask prefactor: 1/sqrt(qN) (paper) or 1/sqrt(q) (unitary).
  double mask_norm_const() const;
  std::size_t wavelet_count() const { return masks.empty() ? 0 : masks.size() - 1; }
};

/// Validates (N >= 1, r odd, 1 <= r <= qN - 1, gcd(r, N) == 1, nu != 0) and fills
/// the default shift set. Throws ConfigError / NonUnitScalar.
SystemConfig make_system(std::shared_ptr<const LocalField> field, int N, int r,
                         std::optional<GFScalar> dilation_unit = std::nullopt,
                         Normalization normalization = Normalization::unitary);

void validate(const SystemConfig& sys);

/// {t * u(s) * nu^{-1} : s < q}: one representative per coset of B in D.
std::vector<FieldElement> default_shift_set(const LocalField& field, GFScalar nu);

FieldElement lambda_element(const LambdaIndex& idx, const SystemConfig& sys);

/// k = r * (qN)^j + s with 0 <= s < (qN)^j.
std::pair<std::uint64_t, std::uint64_t> coset_label_decompose(std::uint64_t k, unsigned j,
                                                              const SystemConfig& sys);

/// Integer label in {0, ..., (qN)^j - 1} to a Lambda index. For N == 1 the
/// label is n itself; for N > 1 labels interleave the two branches
/// (label = 2n + delta).
LambdaIndex label_to_index(std::uint64_t label, const SystemConfig& sys);

/// All lambda in Lambda with lambda in B^b (b may be negative), in index order.
std::vector<LambdaIndex> lambda_in_ball(int b, const SystemConfig& sys);

std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

}  // namespace nuframe
