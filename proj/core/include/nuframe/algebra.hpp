#pragma once

// Exact arithmetic in GF(q) and in the Laurent-series field F_q((t)).
//
// GF(q), q = p^c, is represented in the power basis {1, z, ..., z^{c-1}} of a
// monic irreducible modulus. A scalar is stored as its packed index
// a_0 + a_1 p + ... + a_{c-1} p^{c-1}, which is also the base-q digit used by
// the translation enumeration u(n). Field elements are finite Laurent sums
// sum_l c_l t^l; the prime element is t.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nuframe {

struct FieldConfig {
  int p = 2;
  int c = 1;
  /// Coefficients (lowest degree first, length c + 1, monic) of the modulus. Empty when c == 1.
  std::vector<int> modulus;
};

/// Field config with the shipped modulus for (p, c), when one exists:
/// x^2+x+1 for (2,2), x^3+x+1 for (2,3). Other extensions need an explicit modulus.
FieldConfig default_field_config(int p, int c);

bool is_prime(long long n);

class GFScalar {
 public:
  constexpr GFScalar() = default;
  constexpr explicit GFScalar(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }
  constexpr bool is_zero() const { return index_ == 0; }

  friend constexpr auto operator<=>(GFScalar, GFScalar) = default;

 private:
  std::uint32_t index_ = 0;
};

/// Finite Laurent expansion. Canonical form: the coefficient vector is trimmed
/// on both ends, so zero is the empty vector and valuation() is the lowest
/// exponent with a nonzero coefficient.
class FieldElement {
 public:
  FieldElement() = default;

  static FieldElement monomial(GFScalar coef, int exponent);
  static FieldElement one() { return monomial(GFScalar{1}, 0); }
  static FieldElement prime() { return monomial(GFScalar{1}, 1); }
  /// coeffs[i] is the GF index of the coefficient of t^(lowest + i).
  static FieldElement from_coefficients(int lowest, std::vector<std::uint32_t> coeffs);

  bool is_zero() const { return coef_.empty(); }
  /// Lowest exponent. Undefined for zero; callers check is_zero() first.
  int valuation() const { return lo_; }
  /// One past the highest exponent (lo_ for zero).
  int end_exponent() const { return lo_ + static_cast<int>(coef_.size()); }
  GFScalar coefficient(int exponent) const;
  std::span<const std::uint32_t> coefficients() const { return coef_; }

  /// Terms with exponent < k: the canonical representative of x + B^k.
  FieldElement below(int k) const;
  /// Terms with exponent >= k.
  FieldElement at_or_above(int k) const;
  /// Multiplication by t^e.
  FieldElement shifted(int e) const;

  /// True when every exponent is negative, i.e. x lies in Z = {u(n)}.
  bool is_integral_translate() const { return is_zero() || end_exponent() <= 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  /// Lexicographic over digit strings from the lowest exponent upward.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

 private:
  void trim();

  int lo_ = 0;
  std::vector<std::uint32_t> coef_;
};

class LocalField {
 public:
  /// Validates the config (p prime, c >= 1, modulus irreducible) and builds
  /// the GF(q) tables. Throws ConfigError.
  explicit LocalField(FieldConfig config);

  const FieldConfig& config() const { return config_; }
  int p() const { return config_.p; }
  int c() const { return config_.c; }
  std::uint32_t q() const { return q_; }

  GFScalar gf_add(GFScalar a, GFScalar b) const { return GFScalar{add_[a.index() * q_ + b.index()]}; }
  GFScalar gf_sub(GFScalar a, GFScalar b) const { return gf_add(a, gf_neg(b)); }
  GFScalar gf_neg(GFScalar a) const { return GFScalar{neg_[a.index()]}; }
  GFScalar gf_mul(GFScalar a, GFScalar b) const { return GFScalar{mul_[a.index() * q_ + b.index()]}; }
  /// Throws DivisionByZero for a == 0.
  GFScalar gf_inv(GFScalar a) const;

  /// Base-p digits (coefficients along 1, z, ..., z^{c-1}).
  std::vector<int> digits(GFScalar a) const;
  GFScalar from_digits(std::span<const int> digits) const;
  /// The component along the basis element 1; the character reads only this digit.
  int unit_digit(GFScalar a) const { return static_cast<int>(a.index() % static_cast<std::uint32_t>(config_.p)); }

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement scale(GFScalar a, const FieldElement& x) const;

  /// |x| = q^{-v(x)}, |0| = 0.
  double norm(const FieldElement& x) const;

  /// u(n): base-q digit b_i of n becomes the coefficient of t^{-1-i}.
  FieldElement uindex(std::uint64_t n) const;
  /// Inverse of uindex on Z; nullopt if x has a non-negative exponent or n would overflow.
  std::optional<std::uint64_t> uindex_inverse(const FieldElement& x) const;

  /// Image of the integer N in the prime subfield. Throws NonUnitScalar when p | N.
  GFScalar embed_integer(long long N) const;

  /// Unit digit of the t^{-1} coefficient of xi * x, computed without forming the product.
  int pairing_digit(const FieldElement& xi, const FieldElement& x) const;

  /// exp(2 pi i k / p), exact for the quarter and half turns.
  std::pair<double, double> root_of_unity(int k) const { return roots_[static_cast<std::size_t>(k)]; }

  /// Scalar text form: index for c == 1, "(a0 a1 ...)" base-p digit tuple otherwise.
  std::string format(GFScalar a) const;
  /// Element text form, e.g. "1*t^-1 + 1*t^-3"; zero prints as "0".
  std::string format(const FieldElement& x) const;
  /// Parses the output of format(FieldElement). Throws ConfigError on malformed text.
  FieldElement parse(const std::string& text) const;

 private:
  FieldConfig config_;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::pair<double, double>> roots_;
};

}  // namespace nuframe
