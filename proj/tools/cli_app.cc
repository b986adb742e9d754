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

#include "cli_app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mcoutage/error.hpp"
#include "mcoutage/field_trial.hpp"
#include "mcoutage/selftest.hpp"
#include "mcoutage/sweep.hpp"

namespace mcoutage::cli {
namespace {

struct Options {
  std::vector<int> n_links;
  double rate = 1.0;
  std::vector<double> outages;
  std::string snr_range;
  std::string rate_range;
  std::string outage_range;
  std::string r_range;
  std::string dmt_snr_range;
  std::vector<std::string> combiners;
  std::vector<std::string> methods;
  std::vector<std::string> kinds;
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t seed = 1;
  double bandwidth_hz = 20e6;
  std::vector<double> distances;
  double eta = 2.0;
  std::string preset;
  std::string out;
  bool gnuplot = false;
  unsigned workers = 0;
  // cdf / synth-trace
  std::string trace;
  std::string cdf_metric = "outage";
  std::size_t measurements = 1000;
  std::size_t base_stations = 16;
  // selftest
  double asymptote_scale = 1.0;
};

// Which options the user actually typed, so presets can be overridden.
struct Given {
  const CLI::App* app;
  bool operator()(const std::string& name) const { return app->count(name) > 0; }
};

void add_sweep_options(CLI::App* sub, Options& o) {
  sub->add_option("--n-links", o.n_links, "Link counts, e.g. 2,3,5")->delimiter(',');
  sub->add_option("--rate", o.rate, "Spectral efficiency R_c (bit/s/Hz)");
  sub->add_option("--outage", o.outages, "Outage target(s)")->delimiter(',');
  sub->add_option("--combiner", o.combiners, "jd|sc|mrc|sco (repeatable)")->delimiter(',');
  sub->add_option("--method", o.methods, "exact|asymptotic|bound|mc (repeatable)")
      ->delimiter(',');
  sub->add_option("--mc-samples", o.mc_samples, "Monte-Carlo samples per point");
  sub->add_option("--seed", o.seed, "Random seed");
  sub->add_option("--bandwidth-hz", o.bandwidth_hz, "Bandwidth B in Hz");
  sub->add_option("--distances", o.distances, "Per-link distances")->delimiter(',');
  sub->add_option("--eta", o.eta, "Path-loss exponent");
  sub->add_option("--preset", o.preset, "Figure preset");
  sub->add_option("--out", o.out, "Output file (default stdout)");
  sub->add_flag("--gnuplot", o.gnuplot, "Also write <out>.gp");
  sub->add_option("--workers", o.workers, "Worker threads (0 = all cores)");
}

std::vector<Combiner> parse_combiners(const std::vector<std::string>& names) {
  std::vector<Combiner> out;
  for (const auto& n : names) out.push_back(parse_combiner(n));
  return out;
}

std::vector<Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<Method> out;
  for (const auto& n : names) out.push_back(parse_method(n));
  return out;
}

SweepSpec base_spec(const Options& o, const Given& given, Metric expected) {
  SweepSpec s;
  if (!o.preset.empty()) {
    auto p = sweep_preset(o.preset);
    if (!p || p->metric != expected) {
      throw ValidationError("preset: '" + o.preset + "' is not a " +
                            std::string(to_string(expected)) + " preset");
    }
    s = *p;
  } else {
    s.metric = expected;
  }
  if (given("--n-links")) s.n_links = o.n_links;
  if (given("--rate")) s.rate = o.rate;
  if (given("--outage")) s.outages = o.outages;
  if (given("--combiner")) s.combiners = parse_combiners(o.combiners);
  if (given("--method")) s.methods = parse_methods(o.methods);
  if (given("--mc-samples")) s.mc_samples = o.mc_samples;
  if (given("--seed")) s.seed = o.seed;
  if (given("--bandwidth-hz")) s.bandwidth_hz = o.bandwidth_hz;
  if (given("--distances")) s.distances = o.distances;
  if (given("--eta")) s.eta = o.eta;
  if (o.preset.empty() && s.n_links.empty()) s.n_links = {2};
  return s;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  return f;
}

void emit(const CsvTable& table, const Options& o, const std::string& x_column, bool log_y,
          std::ostream& out) {
  if (o.out.empty()) {
    if (o.gnuplot) throw ValidationError("gnuplot: requires --out");
    table.write(out);
    return;
  }
  const std::filesystem::path path(o.out);
  {
    auto f = open_output(path);
    table.write(f);
    if (!f) throw IoError("write failed for '" + path.string() + "'");
  }
  if (o.gnuplot) {
    auto g = open_output(path.string() + ".gp");
    g << gnuplot_script(table, path.filename().string(), x_column, log_y);
  }
}

int cmd_outage(const Options& o, const Given& given, std::ostream& out) {
  SweepSpec s = base_spec(o, given, Metric::kOutage);
  if (o.preset.empty() && s.combiners.empty()) s.combiners = {Combiner::kJD};
  if (!o.snr_range.empty() && !o.rate_range.empty()) {
    throw ValidationError("snr-db-range: give either --snr-db-range or --rate-range");
  }
  if (!o.rate_range.empty()) {
    s.x_axis = XAxis::kRate;
    s.range = GridRange::parse(o.rate_range);
  } else if (!o.snr_range.empty()) {
    s.x_axis = XAxis::kSnrDb;
    s.range = GridRange::parse(o.snr_range);
  } else if (o.preset.empty()) {
    s.range = {0.0, 40.0, 41};
  }
  const auto table = run_outage_sweep(s, o.workers);
  emit(table, o, std::string(to_string(s.x_axis)), true, out);
  return kExitOk;
}

int cmd_throughput(const Options& o, const Given& given, std::ostream& out) {
  SweepSpec s = base_spec(o, given, Metric::kThroughput);
  if (o.preset.empty() && s.combiners.empty()) s.combiners = {Combiner::kJD};
  if (!o.snr_range.empty()) {
    s.range = GridRange::parse(o.snr_range);
  } else if (o.preset.empty()) {
    s.range = {0.0, 60.0, 61};
  }
  const auto table = run_throughput_sweep(s, o.workers);
  emit(table, o, "snr_db", false, out);
  return kExitOk;
}

int cmd_gain(const Options& o, const Given& given, std::ostream& out) {
  Metric metric = Metric::kGainMcoSco;
  std::vector<Combiner> references;
  for (const auto& k : o.kinds) {
    if (k == "mco-sco") {
      metric = Metric::kGainMcoSco;
    } else if (k == "jd-sc" || k == "jd-mrc") {
      metric = Metric::kGainJdVs;
      references.push_back(k == "jd-sc" ? Combiner::kSC : Combiner::kMRC);
    } else {
      throw ValidationError("kind: unknown gain '" + k + "' (expected mco-sco|jd-sc|jd-mrc)");
    }
  }
  if (!references.empty() && references.size() != o.kinds.size()) {
    throw ValidationError("kind: mco-sco cannot be combined with jd-sc/jd-mrc");
  }
  if (!o.preset.empty()) {
    const auto p = sweep_preset(o.preset);
    if (p && (p->metric == Metric::kGainMcoSco || p->metric == Metric::kGainJdVs) &&
        o.kinds.empty()) {
      metric = p->metric;
    }
  }
  SweepSpec s = base_spec(o, given, metric);
  if (!references.empty()) s.combiners = references;
  if (metric == Metric::kGainJdVs && s.combiners.empty()) {
    s.combiners = {Combiner::kSC, Combiner::kMRC};
  }
  if (!o.rate_range.empty() && !o.outage_range.empty()) {
    throw ValidationError("rate-range: give either --rate-range or --outage-range");
  }
  if (!o.outage_range.empty()) {
    s.x_axis = XAxis::kOutageTarget;
    s.range = GridRange::parse(o.outage_range);
  } else if (!o.rate_range.empty()) {
    s.x_axis = XAxis::kRate;
    s.range = GridRange::parse(o.rate_range);
  } else if (o.preset.empty()) {
    s.x_axis = XAxis::kRate;
    s.range = {0.5, 25.0, 50};
  }
  const auto table = run_gain_sweep(s, o.workers);
  emit(table, o, std::string(to_string(s.x_axis)), false, out);
  return kExitOk;
}

int cmd_dmt(const Options& o, const Given& given, std::ostream& out) {
  SweepSpec s = base_spec(o, given, Metric::kDmt);
  if (o.preset.empty()) {
    s.x_axis = XAxis::kMultiplexingGain;
    if (s.combiners.empty()) s.combiners = {Combiner::kJD, Combiner::kSC, Combiner::kMRC};
    const int max_n = *std::max_element(s.n_links.begin(), s.n_links.end());
    s.range = {0.0, static_cast<double>(max_n), 4 * max_n + 1};
  }
  if (!o.r_range.empty()) s.range = GridRange::parse(o.r_range);
  if (!o.dmt_snr_range.empty()) s.dmt_snr_grid = GridRange::parse(o.dmt_snr_range);
  const auto table = run_dmt_sweep(s, o.workers);
  emit(table, o, "multiplexing_gain", false, out);
  return kExitOk;
}

struct CdfPlan {
  std::string metric = "outage";
  std::vector<int> n_links{2};
  std::vector<Combiner> combiners{Combiner::kJD};
  double rate = 1.0;
  double p_out = 1e-3;
  double bandwidth_hz = 20e6;
};

int cmd_cdf(const Options& o, const Given& given, std::ostream& out, std::ostream& err) {
  CdfPlan plan;
  const std::vector<Combiner> all{Combiner::kJD, Combiner::kSC, Combiner::kMRC,
                                  Combiner::kSCo};
  if (o.preset == "fig5c") {
    plan.metric = "outage";
    plan.n_links = {2, 3};
    plan.combiners = all;
    plan.rate = 1.0;
  } else if (o.preset == "fig5d") {
    plan.metric = "throughput";
    plan.n_links = {2, 3};
    plan.combiners = all;
    plan.p_out = 1e-5;
    plan.bandwidth_hz = 20e6;
  } else if (!o.preset.empty()) {
    throw ValidationError("preset: '" + o.preset + "' is not a cdf preset (fig5c|fig5d)");
  }
  if (given("--metric")) plan.metric = o.cdf_metric;
  if (plan.metric != "outage" && plan.metric != "throughput") {
    throw ValidationError("metric: expected outage|throughput");
  }
  if (given("--n-links")) plan.n_links = o.n_links;
  if (given("--combiner")) plan.combiners = parse_combiners(o.combiners);
  if (given("--rate")) plan.rate = o.rate;
  if (given("--outage")) {
    if (o.outages.size() != 1) throw ValidationError("outage: cdf takes one target");
    plan.p_out = o.outages.front();
  }
  if (given("--bandwidth-hz")) plan.bandwidth_hz = o.bandwidth_hz;
  if (given("--method")) throw ValidationError("method: cdf does not take --method");
  if (o.gnuplot) throw ValidationError("gnuplot: not supported for cdf");

  const SnrTrace trace = o.trace.empty()
                             ? synthesize_trace(o.measurements, o.base_stations, {}, o.seed)
                             : load_trace(o.trace);
  const std::size_t count = plan.n_links.size() * plan.combiners.size();
  if (count > 1 && o.out.empty()) {
    throw ValidationError("out: " + std::to_string(count) +
                          " CDFs requested; --out <directory> is required");
  }
  for (int n : plan.n_links) {
    for (Combiner c : plan.combiners) {
      const FieldTrialResult r =
          plan.metric == "outage"
              ? empirical_outage_cdf(trace, n, plan.rate, c)
              : empirical_throughput_cdf(trace, n, plan.p_out, plan.bandwidth_hz, c);
      if (r.skipped > 0) {
        err << "note: " << to_string(c) << " N=" << n << ": skipped " << r.skipped
            << " measurements with fewer than " << n << " base stations\n";
      }
      if (r.saturated > 0) {
        err << "note: " << to_string(c) << " N=" << n << ": " << r.saturated
            << " asymptotic values clamped to 1\n";
      }
      if (o.out.empty()) {
        write_cdf(r.cdf, out);
        continue;
      }
      const std::filesystem::path dir(o.out);
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
      const auto path = dir / (plan.metric + "_" + std::string(to_string(c)) + "_n" +
                               std::to_string(n) + ".csv");
      auto f = open_output(path);
      write_cdf(r.cdf, f);
    }
  }
  return kExitOk;
}

int cmd_synth(const Options& o, std::ostream& out) {
  const SnrTrace trace = synthesize_trace(o.measurements, o.base_stations, {}, o.seed);
  if (o.out.empty()) {
    write_trace(trace, out);
  } else {
    auto f = open_output(o.out);
    write_trace(trace, f);
  }
  return kExitOk;
}

int cmd_selftest(const Options& o, const Given& given, std::ostream& out) {
  SelftestOptions so;
  so.asymptote_scale = o.asymptote_scale;
  if (given("--mc-samples")) so.mc_samples = o.mc_samples;
  if (given("--seed")) so.seed = o.seed;
  const auto report = run_selftest(so);
  print_report(report, out);
  return report.all_passed() ? kExitOk : kExitNumeric;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-connectivity outage, throughput and gain analysis", "mcoutage"};
  app.require_subcommand(1, 1);
  Options o;

  auto* outage = app.add_subcommand("outage", "Outage probability sweep");
  add_sweep_options(outage, o);
  outage->add_option("--snr-db-range", o.snr_range, "Total SNR grid start:stop:steps (dB)");
  outage->add_option("--rate-range", o.rate_range, "Rate grid start:stop:steps");

  auto* throughput = app.add_subcommand("throughput", "Throughput sweep");
  add_sweep_options(throughput, o);
  throughput->add_option("--snr-db-range", o.snr_range, "Total SNR grid start:stop:steps (dB)");

  auto* gain = app.add_subcommand("gain", "SNR gain sweep (dB)");
  add_sweep_options(gain, o);
  gain->add_option("--kind", o.kinds, "mco-sco | jd-sc | jd-mrc (repeatable)")->delimiter(',');
  gain->add_option("--rate-range", o.rate_range, "Rate grid start:stop:steps");
  gain->add_option("--outage-range", o.outage_range, "Outage-target grid start:stop:steps");

  auto* dmt = app.add_subcommand("dmt", "Diversity-multiplexing tradeoff");
  add_sweep_options(dmt, o);
  dmt->add_option("--r-range", o.r_range, "Multiplexing-gain grid start:stop:steps");
  dmt->add_option("--dmt-snr-range", o.dmt_snr_range,
                  "System SNR grid for the empirical slope (dB)");

  auto* cdf = app.add_subcommand("cdf", "Empirical CDFs over an SNR trace");
  add_sweep_options(cdf, o);
  cdf->add_option("--trace", o.trace, "Trace CSV (default: synthetic trace)");
  cdf->add_option("--metric", o.cdf_metric, "outage | throughput");
  cdf->add_option("--measurements", o.measurements, "Synthetic trace measurements");
  cdf->add_option("--base-stations", o.base_stations, "Synthetic trace base stations");

  auto* synth = app.add_subcommand("synth-trace", "Write a synthetic SNR trace");
  synth->add_option("--measurements", o.measurements, "Number of measurements");
  synth->add_option("--base-stations", o.base_stations, "Base stations per measurement");
  synth->add_option("--seed", o.seed, "Random seed");
  synth->add_option("--out", o.out, "Output file (default stdout)");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in consistency suite");
  selftest->add_option("--mc-samples", o.mc_samples, "Monte-Carlo samples per check");
  selftest->add_option("--seed", o.seed, "Random seed");
  selftest->add_option("--perturb-asymptote", o.asymptote_scale,
                       "Scale asymptotes (mutation check)")
      ->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*outage) return cmd_outage(o, Given{outage}, out);
    if (*throughput) return cmd_throughput(o, Given{throughput}, out);
    if (*gain) return cmd_gain(o, Given{gain}, out);
    if (*dmt) return cmd_dmt(o, Given{dmt}, out);
    if (*cdf) return cmd_cdf(o, Given{cdf}, out, err);
    if (*synth) return cmd_synth(o, out);
    if (*selftest) return cmd_selftest(o, Given{selftest}, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitValidation;
}

}  // namespace mcoutage::cli
