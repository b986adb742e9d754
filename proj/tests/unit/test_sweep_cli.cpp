// Copyright 2026 The mcoutage Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "doctest.h"
#include "mcoutage/csv.hpp"
#include "mcoutage/error.hpp"
#include "mcoutage/sweep.hpp"

using namespace mcoutage;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path(MCOUTAGE_TEST_TMPDIR) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t column(const CsvTable& t, const std::string& name) {
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (t.header[i] == name) return i;
  }
  FAIL("missing column " << name);
  return 0;
}

double cell(const CsvTable& t, std::size_t row, const std::string& name) {
  double v = 0.0;
  REQUIRE(parse_double(t.rows[row][column(t, name)], v));
  return v;
}

}  // namespace

TEST_CASE("GridRange") {
  const auto g = GridRange::parse("0:40:41");
  CHECK(g.start == 0.0);
  CHECK(g.stop == 40.0);
  CHECK(g.steps == 41);
  const auto pts = g.points();
  REQUIRE(pts.size() == 41);
  CHECK(pts[1] == 1.0);
  CHECK(pts.back() == 40.0);
  CHECK_THROWS_AS(GridRange::parse("0:40"), ValidationError);
  CHECK_THROWS_AS(GridRange::parse("a:1:3"), ValidationError);
}

TEST_CASE("sweep validation names the field") {
  SweepSpec s;
  s.metric = Metric::kOutage;
  s.combiners = {Combiner::kJD};
  s.n_links = {2};
  s.range = {10.0, 0.0, 3};
  auto message = [](const SweepSpec& spec) {
    try {
      spec.validate();
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(s).rfind("range", 0) == 0);
  s.range = {0.0, 10.0, 1};
  CHECK(message(s).rfind("range", 0) == 0);
  s.range = {0.0, 10.0, 2};
  CHECK(message(s).empty());
  s.bandwidth_hz = 0.0;
  CHECK(message(s).rfind("bandwidth-hz", 0) == 0);
  s.bandwidth_hz = 1e6;
  s.n_links = {5};
  s.methods = {Method::kExact};
  CHECK(message(s).rfind("n-links", 0) == 0);
  s.n_links = {2};
  s.methods = {Method::kMonteCarlo};
  s.mc_samples = 10;
  CHECK(message(s).rfind("mc-samples", 0) == 0);
  s.mc_samples = 1000;
  s.combiners = {Combiner::kSC};
  s.methods = {Method::kBound};
  CHECK(message(s).rfind("method", 0) == 0);

  SweepSpec g;
  g.metric = Metric::kGainMcoSco;
  g.n_links = {2};
  g.x_axis = XAxis::kRate;
  g.range = {-1.0, 25.0, 10};
  CHECK(message(g).rfind("range", 0) == 0);
  g.range = {0.5, 25.0, 10};
  CHECK(message(g).empty());
}

TEST_CASE("minimal outage sweep gives two rows with all cells") {
  SweepSpec s;
  s.metric = Metric::kOutage;
  s.combiners = {Combiner::kJD, Combiner::kMRC};
  s.n_links = {2};
  s.range = {10.0, 20.0, 2};
  s.rate = 1.0;
  s.methods = {Method::kExact, Method::kAsymptotic, Method::kBound, Method::kMonteCarlo};
  s.mc_samples = 10000;
  const auto t = run_outage_sweep(s);
  CHECK(t.header == std::vector<std::string>{
                        "n_links", "snr_db", "rate", "jd_exact", "jd_asymptotic", "jd_bound",
                        "jd_mc", "jd_mc_ci", "mrc_exact", "mrc_asymptotic", "mrc_bound",
                        "mrc_mc", "mrc_mc_ci", "flags"});
  REQUIRE(t.rows.size() == 2);
  for (const auto& r : t.rows) {
    CHECK(r.size() == t.header.size());
    for (std::size_t i = 0; i + 1 < r.size(); ++i) CHECK_FALSE(r[i].empty());
  }
  CHECK(cell(t, 0, "jd_bound") <= cell(t, 0, "jd_exact"));
  CHECK(cell(t, 1, "mrc_exact") <= cell(t, 1, "mrc_bound"));
}

TEST_CASE("Fig. 3(a): outage targets offset by 20 (N-1)/N dB") {
  auto s = *sweep_preset("fig3a");
  const auto t = run_gain_sweep(s);
  const std::size_t per_block = 50;
  REQUIRE(t.rows.size() == 3 * 2 * per_block);
  for (std::size_t b = 0; b < 3; ++b) {
    const double n = cell(t, b * 2 * per_block, "n_links");
    for (std::size_t i = 0; i < per_block; ++i) {
      const std::size_t lo = b * 2 * per_block + i;
      const std::size_t hi = lo + per_block;
      CHECK(cell(t, lo, "p_out") == 1e-3);
      CHECK(cell(t, hi, "p_out") == 1e-5);
      CHECK(cell(t, hi, "gain_db") - cell(t, lo, "gain_db") ==
            doctest::Approx(20 * (n - 1) / n).epsilon(1e-9));
    }
  }
}

TEST_CASE("Fig. 3(b): JD-vs-SC minus JD-vs-MRC is 10 log10(N!)/N") {
  const auto t = run_gain_sweep(*sweep_preset("fig3b"));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double n = cell(t, i, "n_links");
    const double expect = 10 * std::log10(std::tgamma(n + 1)) / n;
    CHECK(cell(t, i, "jd_vs_sc_db") - cell(t, i, "jd_vs_mrc_db") ==
          doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("Fig. 2(b) table: SCo baseline and both JD inverse columns") {
  auto s = *sweep_preset("fig2b");
  const auto t = run_throughput_sweep(s);
  CHECK(t.header == std::vector<std::string>{"n_links", "snr_db", "p_out", "jd_asymptotic",
                                             "jd_asymptotic_approx", "sco_asymptotic",
                                             "flags"});
  REQUIRE(t.rows.size() == 3 * 61);
  // Highest-SNR rows: the JD slope per 3 dB is close to N B.
  for (std::size_t b = 0; b < 3; ++b) {
    const std::size_t last = b * 61 + 60;
    const double n = cell(t, last, "n_links");
    const double slope = cell(t, last, "jd_asymptotic") - cell(t, last - 3, "jd_asymptotic");
    CHECK(slope / (n * 20e6) > 0.85);
    CHECK(slope / (n * 20e6) < 1.0);
  }
  s.bandwidth_hz = 0.0;
  CHECK_THROWS_AS(run_throughput_sweep(s), ValidationError);
}

TEST_CASE("sweeps do not depend on the worker count") {
  auto s = *sweep_preset("fig2a");
  s.mc_samples = 20000;
  s.range = {0.0, 20.0, 5};
  std::ostringstream a, b;
  run_outage_sweep(s, 1).write(a);
  run_outage_sweep(s, 3).write(b);
  CHECK(a.str() == b.str());
}

TEST_CASE("CLI: exit codes") {
  CHECK(run({"outage", "--combiner", "xyz"}).code == cli::kExitValidation);
  CHECK(run({"outage", "--snr-db-range", "5:1:3"}).code == cli::kExitValidation);
  CHECK(run({"bogus"}).code == cli::kExitValidation);
  CHECK(run({}).code == cli::kExitValidation);
  CHECK(run({"--help"}).code == cli::kExitOk);
  CHECK(run({"throughput", "--bandwidth-hz", "0"}).code == cli::kExitValidation);
  CHECK(run({"gain", "--rate-range", "-1:25:10"}).code == cli::kExitValidation);
  const auto missing = run({"cdf", "--trace", "/nonexistent/trace.csv", "--n-links", "2",
                            "--combiner", "jd"});
  CHECK(missing.code == cli::kExitIo);
  CHECK(missing.err.find("/nonexistent/trace.csv") != std::string::npos);
  CHECK(run({"outage", "--out", "/nonexistent/dir/x.csv", "--snr-db-range", "0:1:2"}).code ==
        cli::kExitIo);
  CHECK(run({"outage", "--snr-db-range", "0:1:2", "--gnuplot"}).code ==
        cli::kExitValidation);
}

TEST_CASE("CLI: outage to stdout") {
  const auto r = run({"outage", "--n-links", "2,3", "--combiner", "jd", "--combiner", "sco",
                      "--snr-db-range", "10:20:2", "--rate", "0.5"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n_links,snr_db,rate,jd_asymptotic,sco_asymptotic,flags");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 4);
}

TEST_CASE("CLI: cdf needs a directory for several outputs") {
  CHECK(run({"cdf", "--preset", "fig5c", "--measurements", "50"}).code ==
        cli::kExitValidation);
  const auto one = run({"cdf", "--n-links", "2", "--combiner", "mrc", "--measurements", "20"});
  REQUIRE(one.code == 0);
  CHECK(one.out.rfind("value,probability\n", 0) == 0);

  const auto dir = scratch("cdf");
  const auto r = run({"cdf", "--preset", "fig5c", "--measurements", "100", "--out",
                      dir.string()});
  REQUIRE(r.code == 0);
  for (const char* c : {"jd", "sc", "mrc", "sco"}) {
    for (int n : {2, 3}) {
      CHECK(fs::exists(dir / ("outage_" + std::string(c) + "_n" + std::to_string(n) + ".csv")));
    }
  }
  const auto d = run({"cdf", "--preset", "fig5d", "--measurements", "100", "--out",
                      dir.string()});
  REQUIRE(d.code == 0);
  CHECK(fs::exists(dir / "throughput_jd_n3.csv"));
}

TEST_CASE("CLI: synth-trace round trips through cdf") {
  const auto dir = scratch("synth");
  const auto trace = dir / "trace.csv";
  REQUIRE(run({"synth-trace", "--measurements", "30", "--seed", "4", "--out", trace.string()})
              .code == 0);
  const auto a = run({"cdf", "--trace", trace.string(), "--n-links", "2", "--combiner", "jd"});
  const auto b = run({"cdf", "--measurements", "30", "--seed", "4", "--n-links", "2",
                      "--combiner", "jd"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("CLI: gnuplot companion script") {
  const auto dir = scratch("gp");
  const auto out = dir / "gain.csv";
  REQUIRE(run({"gain", "--preset", "fig3a", "--out", out.string(), "--gnuplot"}).code == 0);
  const auto script = slurp(out.string() + ".gp");
  CHECK(script.find("gain.csv") != std::string::npos);
  CHECK(script.find("gain_db") != std::string::npos);
}

TEST_CASE("CLI: selftest and its mutation check") {
  const auto ok = run({"selftest"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  const auto bad = run({"selftest", "--perturb-asymptote", "1.1"});
  CHECK(bad.code != 0);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}
