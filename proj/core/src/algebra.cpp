#include "nuframe/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nuframe/errors.hpp"

namespace nuframe {

namespace {

constexpr std::uint32_t kMaxOrder = 1024;

using Poly = std::vector<int>;  // lowest degree first, over Z/p

void trim_poly(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic-or-not divisor b over Z/p.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim_poly(a);
  const int db = static_cast<int>(b.size()) - 1;
  int lead_inv = 1;
  while ((lead_inv * b.back()) % p != 1) ++lead_inv;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int factor = (a.back() * lead_inv) % p;
    for (int i = 0; i <= db; ++i) {
      auto& slot = a[static_cast<std::size_t>(i + shift)];
      slot = ((slot - factor * b[static_cast<std::size_t>(i)]) % p + p) % p;
    }
    trim_poly(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= deg / 2; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly g(static_cast<std::size_t>(d + 1), 0);
      long long rest = code;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<int>(rest % p);
        rest /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldConfig default_field_config(int p, int c) {
  FieldConfig cfg{p, c, {}};
  if (p == 2 && c == 2) cfg.modulus = {1, 1, 1};
  if (p == 2 && c == 3) cfg.modulus = {1, 1, 0, 1};
  return cfg;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement FieldElement::monomial(GFScalar coef, int exponent) {
  FieldElement x;
  if (!coef.is_zero()) {
    x.lo_ = exponent;
    x.coef_.push_back(coef.index());
  }
  return x;
}

FieldElement FieldElement::from_coefficients(int lowest, std::vector<std::uint32_t> coeffs) {
  FieldElement x;
  x.lo_ = lowest;
  x.coef_ = std::move(coeffs);
  x.trim();
  return x;
}

void FieldElement::trim() {
  std::size_t first = 0;
  while (first < coef_.size() && coef_[first] == 0) ++first;
  if (first == coef_.size()) {
    coef_.clear();
    lo_ = 0;
    return;
  }
  std::size_t last = coef_.size();
  while (coef_[last - 1] == 0) --last;
  if (first > 0 || last < coef_.size()) {
    coef_ = std::vector<std::uint32_t>(coef_.begin() + static_cast<std::ptrdiff_t>(first),
                                       coef_.begin() + static_cast<std::ptrdiff_t>(last));
    lo_ += static_cast<int>(first);
  }
}

GFScalar FieldElement::coefficient(int exponent) const {
  if (exponent < lo_ || exponent >= end_exponent()) return GFScalar{};
  return GFScalar{coef_[static_cast<std::size_t>(exponent - lo_)]};
}

FieldElement FieldElement::below(int k) const {
  if (is_zero() || end_exponent() <= k) return *this;
  if (k <= lo_) return {};
  return from_coefficients(lo_, {coef_.begin(), coef_.begin() + (k - lo_)});
}

FieldElement FieldElement::at_or_above(int k) const {
  if (is_zero() || lo_ >= k) return *this;
  if (end_exponent() <= k) return {};
  return from_coefficients(k, {coef_.begin() + (k - lo_), coef_.end()});
}

FieldElement FieldElement::shifted(int e) const {
  FieldElement x = *this;
  if (!x.is_zero()) x.lo_ += e;
  return x;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  if (a.is_zero() && b.is_zero()) return std::strong_ordering::equal;
  int start;
  int stop;
  if (a.is_zero()) {
    start = b.lo_;
    stop = b.end_exponent();
  } else if (b.is_zero()) {
    start = a.lo_;
    stop = a.end_exponent();
  } else {
    start = std::min(a.lo_, b.lo_);
    stop = std::max(a.end_exponent(), b.end_exponent());
  }
  for (int e = start; e < stop; ++e) {
    const auto ca = a.coefficient(e).index();
    const auto cb = b.coefficient(e).index();
    if (ca != cb) return ca <=> cb;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// LocalField

LocalField::LocalField(FieldConfig config) : config_(std::move(config)) {
  const int p = config_.p;
  const int c = config_.c;
  if (!is_prime(p)) throw ConfigError("p must be prime");
  if (c < 1) throw ConfigError("c must be a positive integer");
  long long q = 1;
  for (int i = 0; i < c; ++i) {
    q *= p;
    if (q > kMaxOrder) throw ConfigError("q = p^c exceeds the supported maximum of 1024");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (c == 1) {
    config_.modulus.clear();
  } else {
    if (config_.modulus.empty()) throw ConfigError("c > 1 requires a modulus polynomial");
    if (static_cast<int>(config_.modulus.size()) != c + 1)
      throw ConfigError("modulus must have c + 1 coefficients");
    for (int coef : config_.modulus)
      if (coef < 0 || coef >= p) throw ConfigError("modulus coefficients must lie in [0, p)");
    if (config_.modulus.back() != 1) throw ConfigError("modulus must be monic");
    if (!is_irreducible(config_.modulus, p)) throw ConfigError("modulus is not irreducible over Z/p");
  }

  const auto to_poly = [&](std::uint32_t index) {
    Poly a(static_cast<std::size_t>(c), 0);
    for (int i = 0; i < c; ++i) {
      a[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint32_t>(p));
      index /= static_cast<std::uint32_t>(p);
    }
    return a;
  };
  const auto to_index = [&](const Poly& a) {
    std::uint32_t index = 0;
    for (int i = c - 1; i >= 0; --i) {
      const int d = static_cast<std::size_t>(i) < a.size() ? a[static_cast<std::size_t>(i)] : 0;
      index = index * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(d);
    }
    return index;
  };

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    const Poly pa = to_poly(a);
    Poly na(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i) na[i] = (p - pa[i]) % p;
    neg_[a] = to_index(na);
    for (std::uint32_t b = 0; b < q_; ++b) {
      const Poly pb = to_poly(b);
      Poly sum(pa.size());
      for (std::size_t i = 0; i < pa.size(); ++i) sum[i] = (pa[i] + pb[i]) % p;
      add_[a * q_ + b] = to_index(sum);

      Poly prod(static_cast<std::size_t>(2 * c - 1), 0);
      for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) {
          auto& slot = prod[static_cast<std::size_t>(i + j)];
          slot = (slot + pa[static_cast<std::size_t>(i)] * pb[static_cast<std::size_t>(j)]) % p;
        }
      if (c > 1) prod = poly_mod(prod, config_.modulus, p);
      mul_[a * q_ + b] = to_index(prod);
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = b;

  roots_.resize(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / p;
    std::pair<double, double> w{std::cos(angle), std::sin(angle)};
    if (k == 0) w = {1.0, 0.0};
    if (2 * k == p) w = {-1.0, 0.0};
    if (4 * k == p) w = {0.0, 1.0};
    if (4 * k == 3 * p) w = {0.0, -1.0};
    roots_[static_cast<std::size_t>(k)] = w;
  }
}

GFScalar LocalField::gf_inv(GFScalar a) const {
  if (a.is_zero()) throw DivisionByZero();
  return GFScalar{inv_[a.index()]};
}

std::vector<int> LocalField::digits(GFScalar a) const {
  std::vector<int> out(static_cast<std::size_t>(config_.c));
  std::uint32_t index = a.index();
  for (auto& d : out) {
    d = static_cast<int>(index % static_cast<std::uint32_t>(config_.p));
    index /= static_cast<std::uint32_t>(config_.p);
  }
  return out;
}

GFScalar LocalField::from_digits(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) != config_.c) throw ConfigError("scalar needs exactly c digits");
  std::uint32_t index = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it < 0 || *it >= config_.p) throw ConfigError("scalar digit outside [0, p)");
    index = index * static_cast<std::uint32_t>(config_.p) + static_cast<std::uint32_t>(*it);
  }
  return GFScalar{index};
}

FieldElement LocalField::add(const FieldElement& x, const FieldElement& y) const {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const int lo = std::min(x.valuation(), y.valuation());
  const int hi = std::max(x.end_exponent(), y.end_exponent());
  std::vector<std::uint32_t> out(static_cast<std::size_t>(hi - lo));
  for (int e = lo; e < hi; ++e)
    out[static_cast<std::size_t>(e - lo)] = gf_add(x.coefficient(e), y.coefficient(e)).index();
  return FieldElement::from_coefficients(lo, std::move(out));
}

FieldElement LocalField::neg(const FieldElement& x) const {
  std::vector<std::uint32_t> out(x.coefficients().begin(), x.coefficients().end());
  for (auto& v : out) v = neg_[v];
  return FieldElement::from_coefficients(x.valuation(), std::move(out));
}

FieldElement LocalField::sub(const FieldElement& x, const FieldElement& y) const { return add(x, neg(y)); }

FieldElement LocalField::mul(const FieldElement& x, const FieldElement& y) const {
  if (x.is_zero() || y.is_zero()) return {};
  const auto cx = x.coefficients();
  const auto cy = y.coefficients();
  std::vector<std::uint32_t> out(cx.size() + cy.size() - 1, 0);
  for (std::size_t i = 0; i < cx.size(); ++i) {
    if (cx[i] == 0) continue;
    for (std::size_t j = 0; j < cy.size(); ++j)
      out[i + j] = add_[out[i + j] * q_ + mul_[cx[i] * q_ + cy[j]]];
  }
  return FieldElement::from_coefficients(x.valuation() + y.valuation(), std::move(out));
}

FieldElement LocalField::scale(GFScalar a, const FieldElement& x) const {
  if (a.is_zero() || x.is_zero()) return {};
  std::vector<std::uint32_t> out(x.coefficients().begin(), x.coefficients().end());
  for (auto& v : out) v = mul_[a.index() * q_ + v];
  return FieldElement::from_coefficients(x.valuation(), std::move(out));
}

double LocalField::norm(const FieldElement& x) const {
  if (x.is_zero()) return 0.0;
  return std::pow(static_cast<double>(q_), -x.valuation());
}

FieldElement LocalField::uindex(std::uint64_t n) const {
  std::vector<std::uint32_t> digits;
  while (n > 0) {
    digits.push_back(static_cast<std::uint32_t>(n % q_));
    n /= q_;
  }
  // digit i sits at exponent -1 - i; store from the lowest exponent upward
  std::reverse(digits.begin(), digits.end());
  const int lowest = -static_cast<int>(digits.size());
  return FieldElement::from_coefficients(lowest, std::move(digits));
}

std::optional<std::uint64_t> LocalField::uindex_inverse(const FieldElement& x) const {
  if (x.is_zero()) return 0;
  if (!x.is_integral_translate()) return std::nullopt;
  std::uint64_t n = 0;
  for (int e = x.valuation(); e <= -1; ++e) {
    const std::uint64_t digit = x.coefficient(e).index();
    if (n > (UINT64_MAX - digit) / q_) return std::nullopt;
    n = n * q_ + digit;
  }
  return n;
}

GFScalar LocalField::embed_integer(long long N) const {
  const long long r = ((N % config_.p) + config_.p) % config_.p;
  if (r == 0) throw NonUnitScalar("integer " + std::to_string(N) + " is divisible by p = " + std::to_string(config_.p));
  return GFScalar{static_cast<std::uint32_t>(r)};
}

int LocalField::pairing_digit(const FieldElement& xi, const FieldElement& x) const {
  if (xi.is_zero() || x.is_zero()) return 0;
  const int lo = std::max(xi.valuation(), -1 - (x.end_exponent() - 1));
  const int hi = std::min(xi.end_exponent() - 1, -1 - x.valuation());
  int acc = 0;
  for (int d = lo; d <= hi; ++d) {
    const auto a = xi.coefficient(d).index();
    const auto b = x.coefficient(-1 - d).index();
    acc += unit_digit(GFScalar{mul_[a * q_ + b]});
  }
  return acc % config_.p;
}

std::string LocalField::format(GFScalar a) const {
  if (config_.c == 1) return std::to_string(a.index());
  std::string out = "(";
  const auto ds = digits(a);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(ds[i]);
  }
  return out + ")";
}

std::string LocalField::format(const FieldElement& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  for (int e = x.valuation(); e < x.end_exponent(); ++e) {
    const GFScalar a = x.coefficient(e);
    if (a.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += format(a) + "*t^" + std::to_string(e);
  }
  return out;
}

FieldElement LocalField::parse(const std::string& text) const {
  FieldElement result;
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto fail = [&](const std::string& why) -> FieldElement {
    throw ConfigError("cannot parse field element '" + text + "': " + why);
  };
  skip_ws();
  if (text.substr(pos) == "0") return result;
  while (pos < text.size()) {
    skip_ws();
    GFScalar coef;
    if (pos < text.size() && text[pos] == '(') {
      const auto close = text.find(')', pos);
      if (close == std::string::npos) return fail("unterminated digit tuple");
      std::istringstream in(text.substr(pos + 1, close - pos - 1));
      std::vector<int> ds;
      int d;
      while (in >> d) ds.push_back(d);
      coef = from_digits(ds);
      pos = close + 1;
    } else {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(text.substr(pos), &used);
      } catch (const std::exception&) {
        return fail("expected coefficient");
      }
      if (v >= q_) return fail("coefficient out of range");
      coef = GFScalar{static_cast<std::uint32_t>(v)};
      pos += used;
    }
    if (text.compare(pos, 3, "*t^") != 0) return fail("expected '*t^'");
    pos += 3;
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(text.substr(pos), &used);
    } catch (const std::exception&) {
      return fail("expected exponent");
    }
    pos += used;
    result = add(result, FieldElement::monomial(coef, e));
    skip_ws();
    if (pos < text.size()) {
      if (text[pos] != '+') return fail("expected '+'");
      ++pos;
    }
  }
  return result;
}

}  // namespace nuframe
