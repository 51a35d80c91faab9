#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nuframe/io.hpp"
#include "nuframe_app/app.hpp"

namespace fs = std::filesystem;
using nuframe::app::run;

namespace {

const fs::path kConfigs = NUFRAME_CONFIG_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "nuframe_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p;
}

std::string cfg(const std::string& name) { return (kConfigs / name).string(); }

}  // namespace

TEST_CASE("field-info") {
  const auto r = call({"field-info", "--config", cfg("haar.ini")});
  CHECK(r.code == 0);
  CHECK(r.out.find("u(1) = 1*t^-1") != std::string::npos);
  CHECK(r.out.find("u(31) =") != std::string::npos);

  const auto bad_p = write_file("p4.ini", "[field]\np = 4\n[masks]\nfile = x.masks\n");
  const auto r4 = call({"field-info", "--config", bad_p.string()});
  CHECK(r4.code == 2);
  CHECK(r4.err.find("p must be prime") != std::string::npos);

  const auto no_mod = write_file("c2.ini", "[field]\np = 2\nc = 2\n[masks]\nfile = x.masks\n");
  CHECK(call({"field-info", "--config", no_mod.string()}).code == 2);
  const auto with_mod = write_file("c2m.ini", "[field]\np = 2\nc = 2\nmodulus = 1 1 1\n[masks]\nfile = x.masks\n");
  const auto json_path = scratch("fi.json");
  CHECK(call({"field-info", "--config", with_mod.string(), "--out", json_path.string()}).code == 0);
  const auto j = nlohmann::json::parse(std::ifstream(json_path));
  CHECK(j["version"] == "1");
  CHECK(j["field"]["q"] == 4);
  CHECK(j["uindex"].size() == 32);
}

TEST_CASE("uindex") {
  const auto r = call({"uindex", "--config", cfg("fourier3.ini"), "0", "1", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 0\n1 1*t^-1\n4 1*t^-2 + 1*t^-1\n");
}

TEST_CASE("verify exit codes") {
  const auto haar = call({"verify", "--config", cfg("haar.ini")});
  CHECK(haar.code == 0);
  const auto j = nlohmann::json::parse(haar.out);
  CHECK(j["version"] == "1");
  CHECK(j["gram_max_dev"].get<double>() <= 1e-12);
  for (const char* key : {"config", "partition_check", "sigma_v0_fraction", "gram_max_dev", "bessel_check",
                          "two_scale_residuals", "frame_ratio_min", "frame_ratio_max", "verdicts"})
    CHECK(j.contains(key));
  CHECK(call({"verify", "--config", cfg("fourier3.ini")}).code == 0);
  CHECK(call({"verify", "--config", cfg("haar_perturbed.ini")}).code == 1);

  const auto nonuniform = call({"verify", "--config", cfg("nonuniform_r1.ini")});
  CHECK(nonuniform.code == 1);
  const auto n = nlohmann::json::parse(nonuniform.out);
  CHECK(n["partition_check"]["max_sum"].get<double>() == doctest::Approx(2.0));
  CHECK(n["degeneracy"]["lambda_is_multiset"] == true);

  CHECK(call({"verify", "--config", cfg("missing.ini")}).code == 2);
  CHECK(call({"verify"}).code == 2);
  CHECK(call({"verify", "--config", cfg("haar.ini"), "--mode", "sideways"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
}

TEST_CASE("reports are byte-reproducible and seed-dependent") {
  const auto a = call({"verify", "--config", cfg("haar.ini"), "--seed", "5"});
  const auto b = call({"verify", "--config", cfg("haar.ini"), "--seed", "5"});
  const auto c = call({"verify", "--config", cfg("haar.ini"), "--seed", "6"});
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(nlohmann::json::parse(a.out)["config"]["suite"]["seed"] == 5);
}

TEST_CASE("periodic command") {
  const auto r = call({"periodic", "--config", cfg("haar.ini")});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["periodic"]["theorem31"]["suite_max_residual"].get<double>() <= 1e-9);
  CHECK(!j["periodic"]["lemma31"]["J"].is_null());
  CHECK(j["periodic"]["lemma33_residuals"].size() == 4);
  CHECK(call({"periodic", "--config", cfg("haar_perturbed.ini")}).code == 1);

  const auto text = std::string("[field]\np = 2\n[masks]\nfile = ") + cfg("haar.masks") +
                    "\n[scales]\nj_max = 2\n[suite]\nresolution = 4\ncount = 2\n";
  const auto r2 = call({"periodic", "--config", write_file("trunc.ini", text).string()});
  CHECK(r2.code == 2);
  CHECK(r2.err.find("j_max") != std::string::npos);
}

TEST_CASE("config and mask consistency") {
  const auto text = std::string("[field]\np = 3\n[masks]\nfile = ") + cfg("haar.masks") + "\n";
  CHECK(call({"verify", "--config", write_file("mismatch.ini", text).string()}).code == 2);
  const auto broken = write_file("broken.masks", "# p=2 c=1 N=1 r=1 nu=1 normalization=unitary\nmask 0\n0 0 oops 0\n");
  const auto text2 = "[field]\np = 2\n[masks]\nfile = " + broken.string() + "\n";
  const auto r = call({"verify", "--config", write_file("broken.ini", text2).string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("transform command") {
  const auto one = write_file("one.csv", "# resolution=0 p=2 c=1 modulus=\nrep_digits,re,im\n0:,1,0\n");
  const auto out = scratch("one_hat.csv");
  CHECK(call({"transform", "--in", one.string(), "--out", out.string()}).code == 0);
  std::stringstream got;
  got << std::ifstream(out).rdbuf();
  CHECK(got.str() == "# resolution=0 p=2 c=1 modulus=\nrep_digits,re,im\n0:,1,0\n");

  const auto f = write_file("f.csv",
                            "# resolution=2 p=3 c=1 modulus=\nrep_digits,re,im\n-1:1 2 1,0.5,0\n0:1,-1,0.25\n1:2,0,1\n");
  const auto fwd = scratch("f_hat.csv");
  const auto back = scratch("f_back.csv");
  CHECK(call({"transform", "--in", f.string(), "--out", fwd.string()}).code == 0);
  CHECK(call({"transform", "--in", fwd.string(), "--out", back.string(), "--direction", "inverse"}).code == 0);
  const auto field = std::make_shared<const nuframe::LocalField>(nuframe::default_field_config(3, 1));
  std::ifstream orig_in(f), back_in(back);
  CHECK(nuframe::max_abs_diff(nuframe::read_step_csv(orig_in, field), nuframe::read_step_csv(back_in, field)) < 1e-14);
  const auto naive = call({"transform", "--in", f.string(), "--naive"});
  CHECK(naive.code == 0);
  std::stringstream fast_text;
  fast_text << std::ifstream(fwd).rdbuf();
  std::istringstream naive_in(naive.out), fast_in(fast_text.str());
  CHECK(nuframe::max_abs_diff(nuframe::read_step_csv(naive_in, field), nuframe::read_step_csv(fast_in, field)) < 1e-14);

  CHECK(call({"transform", "--in", write_file("empty.csv", "").string()}).code == 3);
  const auto bad = call({"transform", "--in", write_file("bad.csv", "# resolution=1 p=2 c=1\nrep_digits,re,im\n0:1,zz,0\n").string()});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("line 3") != std::string::npos);
  CHECK(call({"transform", "--in", scratch("nope.csv").string()}).code == 3);
}

TEST_CASE("dump-wavelets") {
  const auto dir = scratch("dump");
  fs::remove_all(dir);
  const auto r = call({"dump-wavelets", "--config", cfg("fourier3.ini"), "--out", dir.string()});
  CHECK(r.code == 0);
  for (const char* name : {"phi.csv", "phi_hat.csv", "psi1.csv", "psi2.csv"}) CHECK(fs::exists(dir / name));
  CHECK(call({"dump-wavelets", "--config", cfg("haar.ini")}).code == 2);
}
