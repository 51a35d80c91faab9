#include "nuframe/system.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nuframe/errors.hpp"

namespace nuframe {

std::string to_string(Normalization mode) { return mode == Normalization::paper ? "paper" : "unitary"; }

Normalization parse_normalization(const std::string& text) {
  if (text == "paper") return Normalization::paper;
  if (text == "unitary") return Normalization::unitary;
  throw ConfigError("normalization must be 'paper' or 'unitary', got '" + text + "'");
}

FieldElement SystemConfig::theta() const { return field->scale(field->gf_inv(nu), field->uindex(static_cast<std::uint64_t>(r))); }

double SystemConfig::dilation_factor() const {
  const double q = static_cast<double>(field->q());
  return normalization == Normalization::paper ? std::sqrt(q * N) : std::sqrt(q);
}

double SystemConfig::mask_norm_const() const { return 1.0 / dilation_factor(); }

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) throw IndexError("integer power overflows 64 bits");
    out *= base;
  }
  return out;
}

std::vector<FieldElement> default_shift_set(const LocalField& field, GFScalar nu) {
  std::vector<FieldElement> shifts;
  const GFScalar inv = field.gf_inv(nu);
  for (std::uint32_t s = 0; s < field.q(); ++s)
    shifts.push_back(field.scale(inv, field.uindex(s).shifted(1)));
  return shifts;
}

void validate(const SystemConfig& sys) {
  if (!sys.field) throw ConfigError("system has no field");
  if (sys.N < 1) throw ConfigError("N must be a positive integer");
  if (sys.r < 1 || sys.r > sys.qN() - 1) throw ConfigError("r must satisfy 1 <= r <= qN - 1");
  if (sys.r % 2 == 0) throw ConfigError("r must be odd");
  if (std::gcd(sys.r, sys.N) != 1) throw ConfigError("r and N must be coprime");
  if (sys.nu.is_zero() || sys.nu.index() >= sys.field->q()) throw ConfigError("dilation unit must be a nonzero scalar");
}

SystemConfig make_system(std::shared_ptr<const LocalField> field, int N, int r,
                         std::optional<GFScalar> dilation_unit, Normalization normalization) {
  SystemConfig sys;
  sys.field = std::move(field);
  sys.N = N;
  sys.r = r;
  sys.normalization = normalization;
  if (!sys.field) throw ConfigError("system has no field");
  if (N < 1) throw ConfigError("N must be a positive integer");
  sys.nu = dilation_unit ? *dilation_unit : sys.field->embed_integer(N);
  validate(sys);
  sys.shift_set = default_shift_set(*sys.field, sys.nu);
  return sys;
}

FieldElement lambda_element(const LambdaIndex& idx, const SystemConfig& sys) {
  FieldElement lambda = sys.field->uindex(idx.n);
  if (idx.delta) lambda = sys.field->add(lambda, sys.theta());
  return lambda;
}

std::pair<std::uint64_t, std::uint64_t> coset_label_decompose(std::uint64_t k, unsigned j,
                                                              const SystemConfig& sys) {
  const std::uint64_t block = checked_pow(static_cast<std::uint64_t>(sys.qN()), j);
  return {k / block, k % block};
}

LambdaIndex label_to_index(std::uint64_t label, const SystemConfig& sys) {
  if (!sys.has_offset_branch()) return {label, false};
  return {label / 2, (label % 2) == 1};
}

namespace {

// Every u(n) congruent to `center` modulo B^b, for center in Z.
void z_coset(const FieldElement& center, int b, const LocalField& field, std::vector<std::uint64_t>& out) {
  const FieldElement fixed = center.below(b);
  if (b >= 0) {
    if (auto n = field.uindex_inverse(fixed)) out.push_back(*n);
    return;
  }
  // free digits at exponents b..-1
  const std::uint64_t count = checked_pow(field.q(), static_cast<unsigned>(-b));
  const auto fixed_n = field.uindex_inverse(fixed);
  if (!fixed_n) return;
  // fixed occupies base-q digit positions >= -b, so the free digits are the low ones
  const std::uint64_t base = *fixed_n;
  for (std::uint64_t low = 0; low < count; ++low) out.push_back(base + low);
}

}  // namespace

std::vector<LambdaIndex> lambda_in_ball(int b, const SystemConfig& sys) {
  std::vector<LambdaIndex> out;
  std::vector<std::uint64_t> ns;
  z_coset(FieldElement{}, b, *sys.field, ns);
  for (auto n : ns) out.push_back({n, false});
  if (sys.has_offset_branch()) {
    ns.clear();
    z_coset(sys.field->neg(sys.theta()), b, *sys.field, ns);
    for (auto n : ns) out.push_back({n, true});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nuframe
