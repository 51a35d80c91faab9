#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "nuframe/algebra.hpp"
#include "nuframe/errors.hpp"

using namespace nuframe;

namespace {

// Schoolbook GF(p)[z] product reduced by the modulus, on base-p digit vectors.
std::uint32_t poly_mul_oracle(std::uint32_t a, std::uint32_t b, const FieldConfig& cfg) {
  const int p = cfg.p, c = cfg.c;
  std::vector<int> x(c), y(c), prod(2 * c, 0);
  for (int i = 0; i < c; ++i) {
    x[i] = static_cast<int>(a % p);
    a /= p;
    y[i] = static_cast<int>(b % p);
    b /= p;
  }
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  if (c > 1) {
    for (int d = 2 * c - 2; d >= c; --d) {
      const int lead = prod[d];
      if (!lead) continue;
      for (int i = 0; i <= c; ++i) prod[d - c + i] = ((prod[d - c + i] - lead * cfg.modulus[i]) % p + p) % p;
    }
  }
  std::uint32_t out = 0;
  for (int i = c - 1; i >= 0; --i) out = out * p + static_cast<std::uint32_t>(prod[i]);
  return out;
}

// Sparse Laurent convolution on exponent -> digit maps.
using Sparse = std::map<int, std::uint32_t>;

Sparse to_sparse(const FieldElement& x) {
  Sparse s;
  if (x.is_zero()) return s;
  for (int e = x.valuation(); e < x.end_exponent(); ++e)
    if (auto d = x.coefficient(e).index()) s[e] = d;
  return s;
}

Sparse convolve(const Sparse& a, const Sparse& b, const LocalField& f) {
  Sparse out;
  for (auto [ea, da] : a)
    for (auto [eb, db] : b) {
      const auto prod = f.gf_mul(GFScalar{da}, GFScalar{db});
      out[ea + eb] = f.gf_add(GFScalar{out[ea + eb]}, prod).index();
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

FieldElement random_element(std::mt19937_64& rng, std::uint32_t q, int lo, int len) {
  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(len));
  for (auto& d : coeffs) d = static_cast<std::uint32_t>(rng() % q);
  return FieldElement::from_coefficients(lo, std::move(coeffs));
}

const std::vector<FieldConfig> kFields = {default_field_config(2, 1), default_field_config(3, 1),
                                          default_field_config(5, 1), default_field_config(2, 2),
                                          default_field_config(2, 3), FieldConfig{3, 2, {1, 0, 1}}};

}  // namespace

TEST_CASE("GF(q) tables match polynomial arithmetic") {
  for (const auto& cfg : kFields) {
    const LocalField f(cfg);
    CAPTURE(f.q());
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      for (std::uint32_t b = 0; b < f.q(); ++b) {
        CHECK(f.gf_mul(GFScalar{a}, GFScalar{b}).index() == poly_mul_oracle(a, b, cfg));
        // addition is digitwise mod p
        std::uint32_t x = a, y = b, sum = 0, place = 1;
        for (int i = 0; i < cfg.c; ++i) {
          sum += ((x % cfg.p + y % cfg.p) % cfg.p) * place;
          x /= cfg.p;
          y /= cfg.p;
          place *= cfg.p;
        }
        CHECK(f.gf_add(GFScalar{a}, GFScalar{b}).index() == sum);
      }
      CHECK(f.gf_add(GFScalar{a}, f.gf_neg(GFScalar{a})).is_zero());
      if (a) CHECK(f.gf_mul(GFScalar{a}, f.gf_inv(GFScalar{a})) == GFScalar{1});
    }
    CHECK_THROWS_AS(f.gf_inv(GFScalar{0}), DivisionByZero);
  }
}

TEST_CASE("digits round trip") {
  const LocalField f(default_field_config(2, 3));
  for (std::uint32_t a = 0; a < f.q(); ++a) {
    const auto d = f.digits(GFScalar{a});
    CHECK(d.size() == 3);
    CHECK(f.from_digits(d) == GFScalar{a});
  }
}

TEST_CASE("field config validation") {
  CHECK_THROWS_WITH_AS(LocalField(FieldConfig{4, 1, {}}), "p must be prime", ConfigError);
  CHECK_THROWS_AS(LocalField(FieldConfig{2, 2, {}}), ConfigError);
  // x^2 + 1 = (x + 1)^2 over GF(2)
  CHECK_THROWS_AS(LocalField(FieldConfig{2, 2, {1, 0, 1}}), ConfigError);
  CHECK_THROWS_AS(LocalField(FieldConfig{2, 0, {}}), ConfigError);
  CHECK_NOTHROW(LocalField(FieldConfig{3, 2, {1, 0, 1}}));
}

TEST_CASE("Laurent products match sparse convolution") {
  std::mt19937_64 rng(7);
  for (const auto& cfg : kFields) {
    const LocalField f(cfg);
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = random_element(rng, f.q(), static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 5));
      const auto y = random_element(rng, f.q(), static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 5));
      const auto z = random_element(rng, f.q(), -2, 3);
      CHECK(to_sparse(f.mul(x, y)) == convolve(to_sparse(x), to_sparse(y), f));
      CHECK(f.mul(x, y) == f.mul(y, x));
      CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
      CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
      CHECK(f.sub(f.add(x, y), y) == x);
      CHECK(f.add(x, f.neg(x)).is_zero());
    }
  }
}

TEST_CASE("norm is ultrametric and multiplicative") {
  const LocalField f(default_field_config(3, 1));
  std::mt19937_64 rng(11);
  CHECK(f.norm(FieldElement{}) == 0.0);
  CHECK(f.norm(FieldElement::prime()) == doctest::Approx(1.0 / 3));
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_element(rng, 3, static_cast<int>(rng() % 5) - 2, 3);
    const auto y = random_element(rng, 3, static_cast<int>(rng() % 5) - 2, 3);
    CHECK(f.norm(f.add(x, y)) <= std::max(f.norm(x), f.norm(y)));
    CHECK(f.norm(f.mul(x, y)) == doctest::Approx(f.norm(x) * f.norm(y)));
  }
}

TEST_CASE("u(n) digit identities and injectivity") {
  for (const auto& cfg : {default_field_config(2, 1), default_field_config(3, 1), default_field_config(2, 2)}) {
    const LocalField f(cfg);
    const std::uint64_t q = f.q();
    CAPTURE(q);
    CHECK(f.uindex(0).is_zero());
    CHECK(f.uindex(1) == FieldElement::monomial(GFScalar{1}, -1));
    // u(r q^k + s) = u(r) t^{-k} + u(s)
    std::uint64_t qk = 1;
    for (int k = 0; k <= 3; ++k, qk *= q) {
      const auto t_minus_k = FieldElement::monomial(GFScalar{1}, -k);
      for (std::uint64_t r = 0; r < q * q * q; ++r)
        for (std::uint64_t s = 0; s < qk; ++s)
          REQUIRE(f.uindex(r * qk + s) == f.add(f.mul(f.uindex(r), t_minus_k), f.uindex(s)));
    }
    std::set<FieldElement> seen;
    const std::uint64_t bound = q * q * q * q * q * q;
    for (std::uint64_t n = 0; n < bound; ++n) {
      const auto u = f.uindex(n);
      CHECK(u.is_integral_translate());
      CHECK(f.uindex_inverse(u) == n);
      seen.insert(u);
    }
    CHECK(seen.size() == bound);
  }
}

TEST_CASE("embed_integer") {
  const LocalField f(default_field_config(3, 1));
  CHECK(f.embed_integer(1) == GFScalar{1});
  CHECK(f.embed_integer(5) == GFScalar{2});
  CHECK(f.embed_integer(-1) == GFScalar{2});
  CHECK_THROWS_AS(f.embed_integer(6), NonUnitScalar);
}

TEST_CASE("pairing digit is the unit digit of the t^-1 coefficient of the product") {
  std::mt19937_64 rng(3);
  for (const auto& cfg : kFields) {
    const LocalField f(cfg);
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = random_element(rng, f.q(), static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 6));
      const auto y = random_element(rng, f.q(), static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 6));
      const auto c = f.mul(x, y).coefficient(-1).index();
      CHECK(f.pairing_digit(x, y) == static_cast<int>(c % static_cast<std::uint32_t>(cfg.p)));
    }
  }
}

TEST_CASE("text form round trips") {
  const LocalField f(default_field_config(2, 2));
  std::mt19937_64 rng(5);
  CHECK(f.format(FieldElement{}) == "0");
  const LocalField f2(default_field_config(2, 1));
  CHECK(f2.format(f2.uindex(5)) == "1*t^-3 + 1*t^-1");
  CHECK(f.format(f.uindex(5)) == "(1 0)*t^-2 + (1 0)*t^-1");
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_element(rng, f.q(), static_cast<int>(rng() % 9) - 4, 4);
    CHECK(f.parse(f.format(x)) == x);
  }
  CHECK_THROWS_AS(f.parse("1*s^2"), ConfigError);
}

TEST_CASE("below / at_or_above split an element") {
  const LocalField f(default_field_config(3, 1));
  const auto x = FieldElement::from_coefficients(-2, {1, 2, 0, 1, 2});
  for (int k = -4; k <= 4; ++k) CHECK(f.add(x.below(k), x.at_or_above(k)) == x);
  CHECK(x.below(0) == FieldElement::from_coefficients(-2, {1, 2}));
  CHECK(x.shifted(2).valuation() == 0);
}
