#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "nuframe/errors.hpp"
#include "nuframe/harmonic.hpp"
#include "nuframe/io.hpp"
#include "nuframe_app/app.hpp"

namespace nuframe::app {

namespace {

struct Options {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string mode;
  std::string in;
  std::string direction = "forward";
  bool naive = false;
  std::vector<std::uint64_t> indices;
};

RunConfig load(const Options& o) {
  if (o.config.empty()) throw ConfigError("--config is required");
  RunConfig cfg = load_run_config(o.config);
  if (o.seed) cfg.seed = *o.seed;
  if (!o.mode.empty()) cfg.normalization = parse_normalization(o.mode);
  return cfg;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot write " + path);
  file << text;
}

int do_transform(const Options& o, std::ostream& out) {
  if (o.in.empty()) throw ConfigError("--in is required");
  std::ifstream in(o.in);
  if (!in) throw DataError(0, "cannot open " + o.in);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::istringstream head(text);
  std::shared_ptr<const LocalField> field;
  try {
    field = std::make_shared<const LocalField>(read_step_csv_field(head));
  } catch (const ConfigError& e) {
    throw DataError(1, e.what());
  }
  std::istringstream body(text);
  const StepFunction f = read_step_csv(body, field);

  StepFunction g(field, 0);
  if (o.direction == "forward")
    g = o.naive ? transform(f) : fast_transform(f);
  else if (o.direction == "inverse")
    g = o.naive ? inverse_transform(f) : fast_inverse_transform(f);
  else
    throw ConfigError("--direction must be 'forward' or 'inverse'");

  std::ostringstream csv;
  write_step_csv(csv, g);
  emit(csv.str(), o.out, out);
  return kPass;
}

int do_dump(const Options& o, std::ostream& out) {
  const RunConfig cfg = load(o);
  if (o.out.empty()) throw ConfigError("dump-wavelets needs --out DIR");
  const SystemConfig sys = build_system(cfg);
  const WaveletSystem ws = WaveletSystem::from_masks(sys, cfg.cascade_iterations);
  std::filesystem::create_directories(o.out);
  const auto write = [&](const std::string& name, const StepFunction& f) {
    std::ofstream file(std::filesystem::path(o.out) / name, std::ios::binary);
    if (!file) throw ConfigError("cannot write " + name);
    write_step_csv(file, f);
    out << name << "\n";
  };
  write("phi_hat.csv", *ws.phi_hat());
  write("phi.csv", ws.generator(0));
  for (std::size_t ell = 1; ell < ws.generators().size(); ++ell)
    write("psi" + std::to_string(ell) + ".csv", ws.generator(ell));
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App cli{"Verification tools for wavelet frames on F_q((t))", "nuframe"};
  cli.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "INI run configuration");
    sub->add_option("--out", o.out, "output path (stdout when omitted)");
    sub->add_option("--seed", o.seed, "override suite.seed");
    sub->add_option("--mode", o.mode, "override system.normalization")->check(CLI::IsMember({"paper", "unitary"}));
  };
  auto* field_info = cli.add_subcommand("field-info", "field structure and the u(n) table");
  common(field_info);
  auto* uindex = cli.add_subcommand("uindex", "print u(n)");
  common(uindex);
  uindex->add_option("n", o.indices, "non-negative integers")->required();
  auto* tr = cli.add_subcommand("transform", "Fourier transform of a step-function dump");
  tr->add_option("--in", o.in, "input CSV")->required();
  tr->add_option("--out", o.out, "output CSV (stdout when omitted)");
  tr->add_option("--direction", o.direction, "forward or inverse")->check(CLI::IsMember({"forward", "inverse"}));
  tr->add_flag("--naive", o.naive, "use the direct double sum");
  auto* verify = cli.add_subcommand("verify", "UEP, partition, two-scale and frame-ratio checks");
  common(verify);
  auto* periodic = cli.add_subcommand("periodic", "periodic system checks on L^2(D)");
  common(periodic);
  auto* dump = cli.add_subcommand("dump-wavelets", "write phi, psi_l and phi_hat as CSV into --out DIR");
  common(dump);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    cli.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e, out, err);
    return code == 0 ? kPass : kConfigError;
  }

  try {
    if (*field_info) {
      std::ostringstream text;
      const CommandResult r = cmd_field_info(load(o), text);
      out << text.str();
      if (!o.out.empty()) emit(r.json, o.out, out);
      return r.exit_code;
    }
    if (*uindex) {
      const LocalField field(load(o).field);
      for (auto n : o.indices) out << n << " " << field.format(field.uindex(n)) << "\n";
      return kPass;
    }
    if (*tr) return do_transform(o, out);
    if (*dump) return do_dump(o, out);
    const RunConfig cfg = load(o);
    const CommandResult r = *verify ? cmd_verify(cfg) : cmd_periodic(cfg);
    emit(r.json, o.out, out);
    err << (r.exit_code == kPass ? "PASS" : "FAIL") << "\n";
    return r.exit_code;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return kDataError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace nuframe::app
