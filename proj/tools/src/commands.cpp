#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "nuframe/errors.hpp"
#include "nuframe/random.hpp"
#include "nuframe_app/app.hpp"

namespace nuframe::app {

using Json = nlohmann::ordered_json;

namespace {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json field_json(const LocalField& field) {
  return {{"p", field.p()}, {"c", field.c()}, {"q", field.q()}, {"modulus", field.config().modulus}};
}

Json config_json(const RunConfig& cfg, const SystemConfig& sys) {
  Json shifts = Json::array();
  for (const auto& s : sys.shift_set) shifts.push_back(sys.field->format(s));
  return {
      {"field", field_json(*sys.field)},
      {"system",
       {{"N", sys.N},
        {"r", sys.r},
        {"qN", sys.qN()},
        {"dilation_unit", sys.field->format(sys.nu)},
        {"normalization", to_string(sys.normalization)},
        {"wavelet_count", sys.wavelet_count()},
        {"shift_set", shifts}}},
      {"masks", cfg.masks.filename().string()},
      {"scales", {{"j0", cfg.j0}, {"j1", cfg.j1}, {"j_max", cfg.j_max}}},
      {"suite",
       {{"prng", "mt19937_64"},
        {"seed", cfg.seed},
        {"count", cfg.count},
        {"resolution", cfg.resolution},
        {"cascade_iterations", cfg.cascade_iterations}}},
      {"tolerances", {{"gram", cfg.tol.gram}, {"identity", cfg.tol.identity}, {"tail", cfg.tol.tail}}},
  };
}

// theta = u(r) nu^{-1} always lies in Z, so for N > 1 the offset branch of
// Lambda repeats Z.
Json degeneracy_json(const SystemConfig& sys) {
  const FieldElement theta = sys.theta();
  const bool in_z = theta.is_integral_translate();
  return {{"theta", sys.field->format(theta)},
          {"theta_in_Z", in_z},
          {"offset_branch", sys.has_offset_branch()},
          {"lambda_is_multiset", sys.has_offset_branch() && in_z},
          {"lambda_multiplicity", sys.has_offset_branch() && in_z ? 2 : 1}};
}

Json cascade_json(const WaveletSystem& ws) {
  return {{"iterations", ws.cascade_iterations()},
          {"converged", ws.cascade_converged()},
          {"m0_at_zero", complex_json(eval_mask(ws.config().masks[0], FieldElement{}, ws.config()))}};
}

std::vector<StepFunction> step_suite(const RunConfig& cfg, const SystemConfig& sys) {
  SuiteRng rng(cfg.seed);
  std::vector<StepFunction> suite;
  for (int i = 0; i < cfg.count; ++i) suite.push_back(random_step(rng, sys.field, cfg.resolution, 0));
  return suite;
}

std::vector<PeriodicStepFunction> periodic_suite(const RunConfig& cfg, const SystemConfig& sys) {
  SuiteRng rng(cfg.seed);
  std::vector<PeriodicStepFunction> suite;
  for (int i = 0; i < cfg.count; ++i) suite.push_back(random_periodic(rng, sys.field, cfg.resolution));
  return suite;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

CommandResult cmd_field_info(const RunConfig& cfg, std::ostream& text) {
  const LocalField field(cfg.field);
  text << "field F_q((t)) with q = " << field.q() << " = " << field.p() << "^" << field.c() << "\n";
  if (field.c() > 1) {
    text << "GF(q) = GF(p)[z]/(";
    const auto& m = field.config().modulus;
    bool first = true;
    for (std::size_t k = m.size(); k-- > 0;) {
      if (m[k] == 0) continue;
      text << (first ? "" : " + ") << m[k];
      if (k > 0) text << "*z^" << k;
      first = false;
    }
    text << ")\n";
  }
  text << "ring of integers D = {|x| <= 1}, prime ideal B = tD, D/B = GF(" << field.q() << ")\n";
  text << "|t^k| = " << field.q() << "^-k, |D| = 1, |B^k| = " << field.q() << "^-k\n";
  text << "u(n) table:\n";
  Json table = Json::array();
  for (std::uint64_t n = 0; n < 32; ++n) {
    const std::string u = field.format(field.uindex(n));
    text << "  u(" << n << ") = " << u << "\n";
    table.push_back({{"n", n}, {"u", u}});
  }
  Json report = {{"version", kReportVersion},
                 {"command", "field-info"},
                 {"field", field_json(field)},
                 {"structure",
                  {{"residue_field_size", field.q()},
                   {"cosets_of_D_in_B^-1", field.q()},
                   {"prime_element", "t"}}},
                 {"uindex", table}};
  return {kPass, dump(report)};
}

CommandResult cmd_verify(const RunConfig& cfg) {
  const SystemConfig sys = build_system(cfg);
  const WaveletSystem ws = WaveletSystem::from_masks(sys, cfg.cascade_iterations);
  const StepFunction& phi_hat = *ws.phi_hat();

  const PartitionCheck partition = check_partition(phi_hat, sys, cfg.tol.gram);
  double min_sum = INFINITY, max_sum = -INFINITY;
  for (const auto& v : partition.sums.values()) {
    min_sum = std::min(min_sum, v.real());
    max_sum = std::max(max_sum, v.real());
  }
  const SigmaV0 sigma = sigma_v0(phi_hat, sys);
  const GramReport gram = uep_gram(sys, &sigma, cfg.tol.gram);
  const BesselReport bessel = bessel_mask_check(sys.masks[0], sys, cfg.tol.gram);

  const auto suite = step_suite(cfg, sys);
  Json residuals = Json::array();
  Json op_residuals = Json::array();
  double worst_two_scale = 0.0;
  for (int j = cfg.j0; j < cfg.j1; ++j) {
    double worst = 0.0, worst_op = 0.0;
    for (const auto& f : suite) {
      const TwoScaleResult t = two_scale_check(f, j, ws);
      worst = std::max(worst, t.residual);
      worst_op = std::max(worst_op, t.operator_residual);
    }
    residuals.push_back(worst);
    op_residuals.push_back(worst_op);
    worst_two_scale = std::max({worst_two_scale, worst, worst_op});
  }
  double ratio_min = INFINITY, ratio_max = -INFINITY;
  for (const auto& f : suite) {
    if (f.is_zero()) continue;
    const double ratio = frame_ratio(f, ws, cfg.j0, cfg.j1);
    ratio_min = std::min(ratio_min, ratio);
    ratio_max = std::max(ratio_max, ratio);
  }

  const Complex m0_at_zero = eval_mask(sys.masks[0], FieldElement{}, sys);
  Json verdicts = {
      {"m0_normalized", std::abs(m0_at_zero - 1.0) <= cfg.tol.gram},
      {"partition", partition.pass},
      {"gram", gram.pass},
      {"bessel", bessel.pass},
      {"two_scale", worst_two_scale <= cfg.tol.identity},
      {"frame_ratio", std::abs(ratio_min - 1.0) <= cfg.tol.identity && std::abs(ratio_max - 1.0) <= cfg.tol.identity},
  };
  bool all = true;
  for (const auto& [k, v] : verdicts.items()) all = all && v.get<bool>();
  verdicts["all"] = all;

  Json report = {
      {"version", kReportVersion},
      {"command", "verify"},
      {"config", config_json(cfg, sys)},
      {"degeneracy", degeneracy_json(sys)},
      {"cascade", cascade_json(ws)},
      {"partition_check",
       {{"resolution", partition.sums.resolution()},
        {"cells", partition.sums.size()},
        {"min_sum", min_sum},
        {"max_sum", max_sum},
        {"max_deviation", partition.max_deviation},
        {"value_at_zero", complex_json(partition.value_at_zero)},
        {"pass", partition.pass}}},
      {"sigma_v0_fraction", sigma.fraction},
      {"gram_max_dev", gram.max_deviation},
      {"gram", {{"resolution", gram.resolution}, {"cells_checked", gram.cells_checked}, {"shifts", gram.shifts}}},
      {"bessel_check", {{"max_sum", bessel.max_sum}, {"pass", bessel.pass}}},
      {"two_scale_residuals", residuals},
      {"two_scale_operator_residuals", op_residuals},
      {"frame_ratio_min", ratio_min},
      {"frame_ratio_max", ratio_max},
      {"verdicts", verdicts},
  };
  return {all ? kPass : kVerifiedFalse, dump(report)};
}

CommandResult cmd_periodic(const RunConfig& cfg) {
  if (cfg.j_max < cfg.resolution)
    throw TruncationError("scales.j_max = " + std::to_string(cfg.j_max) + " is below suite.resolution = " +
                          std::to_string(cfg.resolution));
  const SystemConfig sys = build_system(cfg);
  const GramReport gram = uep_gram(sys, nullptr, cfg.tol.gram);
  const PeriodicSystem ps(WaveletSystem::from_masks(sys, cfg.cascade_iterations), cfg.j_max);
  const auto suite = periodic_suite(cfg, sys);

  // Scaling-energy scan
  Json lemma31;
  bool all_found = true;
  int worst_J = 0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    if (squared_norm(suite[i]) == 0.0) continue;
    const ScalingEnergyScan scan = scaling_energy_scan(suite[i], cfg.epsilon, ps);
    if (i == 0)
      lemma31 = {{"epsilon", cfg.epsilon},
                 {"J", scan.J ? Json(*scan.J) : Json(nullptr)},
                 {"sums", scan.sums},
                 {"norm2", scan.norm2}};
    if (scan.J)
      worst_J = std::max(worst_J, *scan.J);
    else
      all_found = false;
  }
  lemma31["suite_J_max"] = all_found ? Json(worst_J) : Json(nullptr);
  lemma31["suite_all_found"] = all_found;

  Json lemma33 = Json::array();
  double worst33 = 0.0;
  for (int j = 0; j + 1 <= cfg.j_max; ++j) {
    double worst = 0.0;
    for (const auto& f : suite) worst = std::max(worst, periodic_two_scale_check(f, j, ps).residual);
    lemma33.push_back(worst);
    worst33 = std::max(worst33, worst);
  }

  Json theorem31;
  double worst_residual = 0.0, worst_tail = 0.0, worst_defect = 0.0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const PeriodicFrame frame = periodic_frame_check(suite[i], ps);
    if (i == 0) theorem31 = {{"total", frame.total}, {"norm2", frame.norm2}, {"residual", frame.residual}};
    worst_residual = std::max(worst_residual, frame.residual);
    worst_tail = std::max(worst_tail, frame.tail);
    worst_defect = std::max(worst_defect, frame.limit_defect);
  }
  theorem31["suite_max_residual"] = worst_residual;
  theorem31["tail_scale"] = cfg.j_max;
  theorem31["suite_max_tail"] = worst_tail;
  theorem31["suite_max_limit_defect"] = worst_defect;

  Json verdicts = {
      {"gram", gram.pass},
      {"lemma31", all_found},
      {"lemma33", worst33 <= cfg.tol.identity},
      {"theorem31", worst_residual <= cfg.tol.identity},
      {"tail", worst_tail <= cfg.tol.tail},
  };
  bool all = true;
  for (const auto& [k, v] : verdicts.items()) all = all && v.get<bool>();
  verdicts["all"] = all;

  Json report = {
      {"version", kReportVersion},
      {"command", "periodic"},
      {"config", config_json(cfg, sys)},
      {"degeneracy", degeneracy_json(sys)},
      {"gram_max_dev", gram.max_deviation},
      {"periodic",
       {{"lattice", "Z"},
        {"unimplemented_alternative", "sum over lambda in Lambda of f(x + lambda * u(N))"},
        {"lemma31", lemma31},
        {"lemma33_residuals", lemma33},
        {"theorem31", theorem31}}},
      {"verdicts", verdicts},
  };
  return {all ? kPass : kVerifiedFalse, dump(report)};
}

}  // namespace nuframe::app
