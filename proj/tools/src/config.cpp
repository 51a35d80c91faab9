#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "nuframe/errors.hpp"
#include "nuframe/io.hpp"
#include "nuframe_app/app.hpp"

namespace nuframe::app {

namespace pt = boost::property_tree;

namespace {

template <class T>
T get(const pt::ptree& tree, const std::string& key, T fallback) {
  try {
    return tree.get<T>(key, fallback);
  } catch (const pt::ptree_bad_data&) {
    throw ConfigError("bad value for '" + key + "': '" + tree.get<std::string>(key) + "'");
  }
}

template <class T>
T require(const pt::ptree& tree, const std::string& key) {
  if (!tree.get_optional<std::string>(key)) throw ConfigError("missing required key '" + key + "'");
  return get<T>(tree, key, T{});
}

std::vector<int> parse_int_list(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> out;
  int v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw ConfigError("modulus must be a list of integers, got '" + text + "'");
  return out;
}

}  // namespace

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("config " + path.string() + ": " + e.message() + " (line " + std::to_string(e.line()) + ")");
  }

  RunConfig cfg;
  cfg.source = path;
  cfg.field.p = require<int>(tree, "field.p");
  cfg.field.c = get<int>(tree, "field.c", 1);
  cfg.field.modulus = parse_int_list(get<std::string>(tree, "field.modulus", ""));
  cfg.N = get<int>(tree, "system.N", 1);
  cfg.r = get<int>(tree, "system.r", 1);
  if (const auto nu = tree.get_optional<std::string>("system.dilation_unit"); nu && !nu->empty())
    cfg.dilation_unit = get<std::uint32_t>(tree, "system.dilation_unit", 1);
  try {
    cfg.normalization = parse_normalization(get<std::string>(tree, "system.normalization", "unitary"));
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }

  if (const auto masks = tree.get_optional<std::string>("masks.file"); masks && !masks->empty()) {
    std::filesystem::path m(*masks);
    cfg.masks = m.is_absolute() ? m : path.parent_path() / m;
  } else {
    throw ConfigError("missing required key 'masks.file'");
  }

  cfg.j0 = get<int>(tree, "scales.j0", cfg.j0);
  cfg.j1 = get<int>(tree, "scales.j1", cfg.j1);
  cfg.j_max = get<int>(tree, "scales.j_max", cfg.j_max);
  cfg.seed = get<std::uint64_t>(tree, "suite.seed", cfg.seed);
  cfg.count = get<int>(tree, "suite.count", cfg.count);
  cfg.resolution = get<int>(tree, "suite.resolution", cfg.resolution);
  cfg.cascade_iterations = get<int>(tree, "suite.cascade_iterations", cfg.cascade_iterations);
  cfg.epsilon = get<double>(tree, "periodic.epsilon", cfg.epsilon);
  cfg.tol.gram = get<double>(tree, "tolerances.gram", cfg.tol.gram);
  cfg.tol.identity = get<double>(tree, "tolerances.identity", cfg.tol.identity);
  cfg.tol.tail = get<double>(tree, "tolerances.tail", cfg.tol.tail);

  if (cfg.j1 < cfg.j0) throw ConfigError("scales.j1 must be >= scales.j0");
  if (cfg.j_max < 0) throw ConfigError("scales.j_max must be non-negative");
  if (cfg.count < 1) throw ConfigError("suite.count must be positive");
  if (cfg.resolution < 0) throw ConfigError("suite.resolution must be non-negative");
  if (cfg.cascade_iterations < 0) throw ConfigError("suite.cascade_iterations must be non-negative");
  if (!(cfg.epsilon > 0.0)) throw ConfigError("periodic.epsilon must be positive");
  return cfg;
}

SystemConfig build_system(const RunConfig& cfg) {
  auto field = std::make_shared<const LocalField>(cfg.field);
  std::optional<GFScalar> nu;
  if (cfg.dilation_unit) {
    if (*cfg.dilation_unit == 0 || *cfg.dilation_unit >= field->q())
      throw ConfigError("dilation_unit must be a nonzero GF(q) index below q");
    nu = GFScalar{*cfg.dilation_unit};
  }
  SystemConfig sys;
  try {
    sys = make_system(field, cfg.N, cfg.r, nu, cfg.normalization);
  } catch (const NonUnitScalar& e) {
    throw ConfigError(e.what());
  }

  std::ifstream in(cfg.masks);
  if (!in) throw ConfigError("cannot open mask file " + cfg.masks.string());
  const MaskFile file = read_mask_file(in);
  const auto mismatch = [&](const std::string& what) {
    throw ConfigError("mask file " + cfg.masks.string() + " was written for a different " + what);
  };
  if (file.p != cfg.field.p || file.c != cfg.field.c) mismatch("field");
  if (file.N != sys.N || file.r != sys.r) mismatch("system (N, r)");
  if (file.nu != sys.nu.index()) mismatch("dilation unit");
  // The normalization only sets the mask prefactor, so --mode may override the file.

  for (const auto& coeffs : file.masks) sys.masks.push_back(make_mask(coeffs, sys));
  return sys;
}

}  // namespace nuframe::app
