#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nuframe/errors.hpp"
#include "nuframe/harmonic.hpp"
#include "nuframe/random.hpp"
#include "systems.hpp"

using namespace nuframe;

namespace {

FieldElement point(std::initializer_list<std::uint32_t> digits, int lo = 0) {
  return FieldElement::from_coefficients(lo, std::vector<std::uint32_t>(digits));
}

// Direct scan over n < q^depth (both branches) with no support reasoning.
std::vector<Coefficient> brute_force_analysis(const StepFunction& f, const WaveletSystem& ws, int j_begin, int j_end,
                                              unsigned depth) {
  const auto& sys = ws.config();
  std::vector<Coefficient> out;
  const std::uint64_t bound = checked_pow(sys.field->q(), depth);
  for (std::size_t ell = 0; ell < ws.generators().size(); ++ell)
    for (int j = j_begin; j < j_end; ++j)
      for (std::uint64_t n = 0; n < bound; ++n)
        for (bool delta : {false, true}) {
          if (delta && !sys.has_offset_branch()) continue;
          const LambdaIndex idx{n, delta};
          const Complex c = inner(f, system_member(ell, j, idx, ws));
          if (c != Complex{}) out.push_back({ell, j, idx, c});
        }
  return out;
}

}  // namespace

TEST_CASE("Haar masks") {
  const auto sys = testsys::haar_system();
  CHECK(std::abs(eval_mask(sys.masks[0], FieldElement{}, sys) - 1.0) < 1e-15);
  CHECK(std::abs(eval_mask(sys.masks[1], FieldElement{}, sys)) < 1e-15);
  CHECK(mask_resolution(sys.masks[0], sys) == 1);
  // m0 = 1_B, m1 = 1_{1+B} on D
  CHECK(std::abs(eval_mask(sys.masks[0], point({0, 1}), sys) - 1.0) < 1e-15);
  CHECK(std::abs(eval_mask(sys.masks[0], point({1}), sys)) < 1e-15);
  CHECK(std::abs(eval_mask(sys.masks[1], point({1, 1}), sys) - 1.0) < 1e-15);
}

TEST_CASE("masks are locally constant and Z-periodic") {
  SuiteRng rng(31);
  const auto sys = testsys::fourier_system(3);
  std::map<LambdaIndex, Complex> a{{{0, false}, 0.3}, {{4, false}, Complex(0.1, 0.2)}, {{11, false}, -0.4}};
  const Mask m = make_mask(a, sys);
  const int K = mask_resolution(m, sys);
  CHECK(K == 3);
  const auto table = mask_cells(m, sys);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto xi = table.representative(i);
    const auto jitter = point({static_cast<std::uint32_t>(rng.below(3)), static_cast<std::uint32_t>(rng.below(3))}, K);
    CHECK(std::abs(eval_mask(m, sys.field->add(xi, jitter), sys) - table[i]) < 1e-14);
    CHECK(std::abs(eval_mask(m, sys.field->add(xi, sys.field->uindex(rng.below(100))), sys) - table[i]) < 1e-14);
  }
  CHECK_THROWS_AS(mask_cells(m, sys, 2), ResolutionError);
}

TEST_CASE("q = 3 Fourier masks are indicators of the residue classes") {
  const auto sys = testsys::fourier_system(3);
  for (std::uint32_t l = 0; l < 3; ++l)
    for (std::uint32_t d = 0; d < 3; ++d)
      CHECK(std::abs(eval_mask(sys.masks[l], point({d}), sys) - (l == d ? 1.0 : 0.0)) < 1e-14);
}

TEST_CASE("refinement and wavelets for Haar") {
  const auto sys = testsys::haar_system();
  const auto one_d = StepFunction::indicator(sys.field, 0, FieldElement{});
  CHECK(max_abs_diff(refine(refine_hat(one_d, sys.masks[0], sys), 4), refine(one_d, 4)) < 1e-15);
  CHECK(refine_hat(StepFunction(sys.field, 0), sys.masks[0], sys).is_zero());

  // Haar wavelet: +1 on B, -1 on 1 + B
  const auto psi = wavelet_time(one_d, sys.masks[1], sys);
  CHECK(std::abs(psi(point({0, 1, 1})) - 1.0) < 1e-14);
  CHECK(std::abs(psi(point({1, 0, 1})) + 1.0) < 1e-14);
  CHECK(std::abs(psi(point({1}, -1))) < 1e-14);
  const auto psi_hat = wavelet_hat(one_d, sys.masks[1], sys);
  CHECK(std::abs(psi_hat(FieldElement{}) - eval_mask(sys.masks[1], FieldElement{}, sys)) < 1e-15);

  for (int it : {0, 1, 5}) CHECK(max_abs_diff(cascade(sys.masks[0], it, sys), one_d) < 1e-14);
}

TEST_CASE("cascade requires a normalized refinement mask") {
  auto sys = testsys::haar_system();
  Mask scaled = sys.masks[0];
  for (auto& [idx, a] : scaled.coeffs) a *= 1.1;
  CHECK_THROWS_AS(cascade(scaled, 3, sys), NotNormalized);
  CHECK_THROWS_AS(cascade_hat(scaled, 3, sys), NotNormalized);
}

TEST_CASE("partition of unity and sigma(V0)") {
  for (auto sys : {testsys::haar_system(), testsys::fourier_system(3)}) {
    const auto ws = WaveletSystem::from_masks(sys);
    CHECK(ws.cascade_converged());
    const auto part = check_partition(*ws.phi_hat(), sys);
    CHECK(part.pass);
    CHECK(part.max_deviation < 1e-12);
    const auto sigma = sigma_v0(*ws.phi_hat(), sys);
    CHECK(sigma.fraction == 1.0);
  }
  const auto sys = testsys::haar_system();
  const auto zero = sigma_v0(StepFunction(sys.field, 0), sys);
  CHECK(zero.cell_count == 0);
  CHECK(check_partition(StepFunction(sys.field, 0), sys).max_deviation == 1.0);

  // phi_hat = 1_B: only lambda = 0 can bring xi + lambda into B, so the sum is 1_B
  for (int p : {2, 3}) {
    const auto s = testsys::fourier_system(p);
    const auto sv = sigma_v0(StepFunction::indicator(s.field, 1, FieldElement{}), s);
    CHECK(sv.fraction == doctest::Approx(1.0 / p));
  }
}

TEST_CASE("nonuniform N = 3 partition counts both branches") {
  for (int r : {1, 5}) {
    const auto sys = testsys::nonuniform_haar(r);
    const auto ws = WaveletSystem::from_masks(sys);
    const auto part = check_partition(*ws.phi_hat(), sys);
    for (const auto& v : part.sums.values()) CHECK(std::abs(v.real() - 2.0) < 1e-12);
    CHECK_FALSE(part.pass);
  }
}

TEST_CASE("UEP Gram verifier") {
  CHECK(uep_gram(testsys::haar_system()).max_deviation <= 1e-12);
  CHECK(uep_gram(testsys::fourier_system(3)).pass);
  CHECK(uep_gram(testsys::fourier_system(5)).pass);

  const auto bad = testsys::perturbed(testsys::haar_system(), 1, {1, false}, 0.01);
  const auto g = uep_gram(bad);
  CHECK_FALSE(g.pass);
  CHECK(g.max_deviation >= 1e-3);

  // a unimodular phase on one mask leaves the Gram matrix unchanged
  auto phased = testsys::fourier_system(3);
  for (auto& [idx, a] : phased.masks[2].coeffs) a *= std::polar(1.0, 0.7);
  CHECK(uep_gram(phased).pass);

  auto empty = testsys::haar_system();
  empty.shift_set.clear();
  CHECK_THROWS_AS(uep_gram(empty), ConfigError);
}

TEST_CASE("Bessel mask check") {
  auto sys = testsys::haar_system();
  const auto ok = bessel_mask_check(sys.masks[0], sys);
  CHECK(ok.pass);
  CHECK(ok.max_sum == doctest::Approx(1.0));
  Mask scaled = sys.masks[0];
  for (auto& [idx, a] : scaled.coeffs) a *= 1.1;
  CHECK_FALSE(bessel_mask_check(scaled, sys).pass);
  const auto zero = bessel_mask_check(make_mask({}, sys), sys);
  CHECK(zero.pass);
  CHECK(zero.max_sum == 0.0);
}

TEST_CASE("system members") {
  SuiteRng rng(32);
  const auto sys = testsys::fourier_system(3);
  const auto ws = WaveletSystem::from_masks(sys);
  for (std::size_t ell = 0; ell < 3; ++ell) {
    CHECK(max_abs_diff(system_member(ell, 0, {}, ws), ws.generator(ell)) == 0.0);
    for (int j : {-2, 1, 3})
      CHECK(norm2(system_member(ell, j, {rng.below(50), false}, ws)) == doctest::Approx(norm2(ws.generator(ell))));
  }
  // Haar, j = 1: the scaling member lives on t * lambda + B
  const auto haar = WaveletSystem::from_masks(testsys::haar_system());
  const auto& f = *haar.config().field;
  for (std::uint64_t n : {0, 1, 6}) {
    const auto m = system_member(0, 1, {n, false}, haar);
    REQUIRE(m.size() == 1);
    CHECK(m.cells().begin()->first == f.uindex(n).shifted(1).below(1));
    CHECK(m.resolution() == 1);
  }
}

TEST_CASE("analysis is support-exact") {
  SuiteRng rng(33);
  for (auto sys : {testsys::haar_system(), testsys::fourier_system(3), testsys::nonuniform_haar(5)}) {
    const auto ws = WaveletSystem::from_masks(sys);
    for (int trial = 0; trial < 3; ++trial) {
      const auto f = random_step(rng, sys.field, 2, -1);
      const auto table = analysis(f, ws, -1, 3);
      const auto brute = brute_force_analysis(f, ws, -1, 3, sys.field->q() == 2 ? 6 : 4);
      REQUIRE(table.size() == brute.size());
      for (std::size_t i = 0; i < table.size(); ++i) {
        CHECK(table[i].ell == brute[i].ell);
        CHECK(table[i].j == brute[i].j);
        CHECK(table[i].idx == brute[i].idx);
        CHECK(table[i].value == brute[i].value);
      }
    }
  }
  const auto ws = WaveletSystem::from_masks(testsys::haar_system());
  CHECK(analysis(StepFunction(ws.config().field, 3), ws, 0, 4).empty());
}

TEST_CASE("Haar coefficients of a wavelet") {
  const auto ws = WaveletSystem::from_masks(testsys::haar_system());
  const auto psi = ws.generator(1);
  for (const auto& c : analysis(psi, ws, 0, 3)) {
    const bool self = c.ell == 1 && c.j == 0 && c.idx == LambdaIndex{};
    if (self)
      CHECK(std::abs(c.value - squared_norm(psi)) < 1e-14);
    else if (c.ell == 1)
      CHECK(std::abs(c.value) < 1e-14);
  }
}

TEST_CASE("two-scale identity and frame ratio on tight systems") {
  SuiteRng rng(34);
  for (auto sys : {testsys::haar_system(), testsys::fourier_system(3)}) {
    const auto ws = WaveletSystem::from_masks(sys);
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = random_step(rng, sys.field, 4, 0);
      for (int j = 0; j < 4; ++j) {
        const auto t = two_scale_check(f, j, ws);
        CHECK(t.residual <= 1e-9);
        CHECK(t.operator_residual <= 1e-9);
      }
      CHECK(frame_ratio(f, ws, 0, 4) == doctest::Approx(1.0).epsilon(1e-9));
    }
    const auto zero = two_scale_check(StepFunction(sys.field, 2), 1, ws);
    CHECK(zero.residual == 0.0);
    CHECK_THROWS_AS(frame_ratio(StepFunction(sys.field, 2), ws, 0, 2), DegenerateInput);
    // f = phi_{j0, 0}
    CHECK(frame_ratio(system_member(0, 2, {}, ws), ws, 2, 3) == doctest::Approx(1.0).epsilon(1e-12));
    // doubling every generator quadruples the ratio
    std::vector<StepFunction> doubled;
    for (const auto& g : ws.generators()) doubled.push_back(Complex{2.0} * g);
    const auto ws2 = WaveletSystem::from_generators(sys, doubled);
    const auto f = random_step(rng, sys.field, 3, 0);
    CHECK(frame_ratio(f, ws2, 0, 3) == doctest::Approx(4.0).epsilon(1e-9));
  }
}

TEST_CASE("perturbed masks break the two-scale identity") {
  SuiteRng rng(35);
  const auto sys = testsys::perturbed(testsys::haar_system(), 1, {1, false}, 0.01);
  const auto ws = WaveletSystem::from_masks(sys);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_step(rng, sys.field, 4, 0);
    for (int j = 0; j < 4; ++j) worst = std::max(worst, two_scale_check(f, j, ws).residual);
  }
  CHECK(worst > 1e-3);
}

TEST_CASE("non-normalized refinement masks are accepted by the system builder") {
  const auto sys = testsys::perturbed(testsys::haar_system(), 0, {0, false}, 0.01);
  const auto ws = WaveletSystem::from_masks(sys, 4);
  CHECK(ws.cascade_iterations() == 4);
  CHECK_FALSE(ws.cascade_converged());
  CHECK(std::abs((*ws.phi_hat())(FieldElement{}) - std::pow(eval_mask(sys.masks[0], {}, sys), 4)) < 1e-12);
}
