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

#include "mcoutage/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "mcoutage/error.hpp"
#include "mcoutage/gains_dmt.hpp"
#include "mcoutage/link_model.hpp"
#include "mcoutage/outage.hpp"
#include "mcoutage/parallel.hpp"
#include "mcoutage/special_functions.hpp"
#include "mcoutage/throughput.hpp"

namespace mcoutage {
namespace {

constexpr Method kMethodOrder[] = {Method::kExact, Method::kAsymptotic, Method::kBound,
                                   Method::kMonteCarlo};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t cell_seed(std::uint64_t seed, std::size_t row, std::size_t column) {
  return splitmix64(seed ^ splitmix64(row * 0x10001ull + column));
}

bool has(const std::vector<Method>& v, Method m) {
  return std::find(v.begin(), v.end(), m) != v.end();
}

std::vector<Method> effective_methods(const SweepSpec& spec) {
  if (!spec.methods.empty()) return spec.methods;
  switch (spec.metric) {
    case Metric::kOutage:
    case Metric::kThroughput:
      return {Method::kAsymptotic};
    case Metric::kGainMcoSco:
    case Metric::kGainJdVs:
      return {Method::kExact};
    case Metric::kDmt:
      return {Method::kExact, Method::kAsymptotic};
  }
  return {};
}

bool outage_method_applies(Combiner c, Method m) {
  if (m == Method::kBound) return c == Combiner::kJD || c == Combiner::kMRC;
  return true;
}

bool throughput_method_applies(Combiner, Method m) {
  return m == Method::kExact || m == Method::kAsymptotic;
}

std::vector<double> link_distances(const SweepSpec& spec, int n) {
  if (spec.distances.empty()) return std::vector<double>(static_cast<std::size_t>(n), 1.0);
  return {spec.distances.begin(), spec.distances.begin() + n};
}

std::string fmt(double v) { return format_double(v); }

struct Row {
  std::vector<std::string> cells;
  std::vector<std::string> flags;
};

std::string join_flags(const std::vector<std::string>& flags) {
  std::string out;
  for (const auto& f : flags) {
    if (!out.empty()) out += ';';
    out += f;
  }
  return out;
}

CsvTable assemble(std::vector<std::string> header, std::vector<Row> rows) {
  CsvTable t;
  t.header = std::move(header);
  t.header.push_back("flags");
  t.rows.reserve(rows.size());
  for (auto& r : rows) {
    r.cells.push_back(join_flags(r.flags));
    t.rows.push_back(std::move(r.cells));
  }
  return t;
}

template <class Fn>
std::vector<Row> evaluate(std::size_t count, unsigned workers, Fn&& fn) {
  std::vector<Row> rows(count);
  parallel_for(count, workers, [&](std::size_t i) { rows[i] = fn(i); });
  return rows;
}

std::string column_name(Combiner c, std::string_view suffix) {
  return std::string(to_string(c)) + "_" + std::string(suffix);
}

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw ValidationError(field + ": " + what);
}

}  // namespace

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::kOutage:
      return "outage";
    case Metric::kThroughput:
      return "throughput";
    case Metric::kGainMcoSco:
      return "gain-mco-sco";
    case Metric::kGainJdVs:
      return "gain-jd";
    case Metric::kDmt:
      return "dmt";
  }
  return "?";
}

std::string_view to_string(XAxis x) {
  switch (x) {
    case XAxis::kSnrDb:
      return "snr_db";
    case XAxis::kRate:
      return "rate";
    case XAxis::kOutageTarget:
      return "p_out";
    case XAxis::kMultiplexingGain:
      return "multiplexing_gain";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::kExact:
      return "exact";
    case Method::kAsymptotic:
      return "asymptotic";
    case Method::kBound:
      return "bound";
    case Method::kMonteCarlo:
      return "mc";
  }
  return "?";
}

Method parse_method(std::string_view s) {
  if (s == "exact") return Method::kExact;
  if (s == "asymptotic") return Method::kAsymptotic;
  if (s == "bound") return Method::kBound;
  if (s == "mc" || s == "monte-carlo") return Method::kMonteCarlo;
  throw ValidationError("method: unknown method '" + std::string(s) +
                        "' (expected exact|asymptotic|bound|mc)");
}

GridRange GridRange::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw ValidationError("range: expected start:stop:steps, got '" + std::string(text) +
                          "'");
  }
  GridRange r;
  long long steps = 0;
  if (!parse_double(trim(text.substr(0, first)), r.start) ||
      !parse_double(trim(text.substr(first + 1, second - first - 1)), r.stop) ||
      !parse_int64(trim(text.substr(second + 1)), steps)) {
    throw ValidationError("range: cannot parse '" + std::string(text) + "'");
  }
  r.steps = static_cast<int>(steps);
  return r;
}

std::vector<double> GridRange::points() const {
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(std::max(steps, 0)));
  for (int i = 0; i < steps; ++i) {
    pts.push_back(i == steps - 1 ? stop : start + (stop - start) * i / (steps - 1));
  }
  return pts;
}

void SweepSpec::validate() const {
  require(range.start < range.stop, "range", "start must be < stop");
  require(range.steps >= 2, "range", "steps must be >= 2");
  require(!n_links.empty(), "n-links", "at least one link count is required");
  for (int n : n_links) require(n >= 1, "n-links", "link counts must be >= 1");
  require(bandwidth_hz > 0.0, "bandwidth-hz", "must be > 0");
  require(eta > 0.0, "eta", "must be > 0");
  require(!outages.empty(), "outage", "at least one outage target is required");
  for (double p : outages) require(p > 0.0 && p < 1.0, "outage", "must lie in (0, 1)");
  const int max_n = *std::max_element(n_links.begin(), n_links.end());
  if (!distances.empty()) {
    require(distances.size() >= static_cast<std::size_t>(max_n), "distances",
            "need one distance per link (" + std::to_string(max_n) + ")");
    for (double d : distances) require(d > 0.0, "distances", "must be > 0");
  }
  const auto methods_used = effective_methods(*this);
  const bool wants_mc = has(methods_used, Method::kMonteCarlo);
  if (wants_mc) {
    require(mc_samples >= kMinMonteCarloSamples, "mc-samples",
            "must be >= " + std::to_string(kMinMonteCarloSamples));
  }

  auto require_axis = [&](std::initializer_list<XAxis> allowed) {
    const bool ok = std::find(allowed.begin(), allowed.end(), x_axis) != allowed.end();
    require(ok, "x-axis",
            std::string(to_string(x_axis)) + " is not valid for " +
                std::string(to_string(metric)));
  };
  auto require_methods = [&](std::function<bool(Combiner, Method)> applies,
                             const std::vector<Combiner>& combos) {
    for (Method m : methods_used) {
      bool any = false;
      for (Combiner c : combos) any = any || applies(c, m);
      require(any, "method",
              std::string(to_string(m)) + " does not apply to any requested combiner for " +
                  std::string(to_string(metric)));
    }
  };

  switch (metric) {
    case Metric::kOutage: {
      require(!combiners.empty(), "combiner", "at least one combiner is required");
      require_axis({XAxis::kSnrDb, XAxis::kRate});
      require_methods(outage_method_applies, combiners);
      if (x_axis == XAxis::kRate) require(range.start >= 0.0, "range", "rate must be >= 0");
      const bool needs_positive =
          has(methods_used, Method::kAsymptotic) || has(methods_used, Method::kBound);
      if (needs_positive) {
        const double lo = x_axis == XAxis::kRate ? range.start : rate;
        require(lo > 0.0, x_axis == XAxis::kRate ? "range" : "rate",
                "asymptotic and bound methods need rate > 0");
      } else if (x_axis != XAxis::kRate) {
        require(rate >= 0.0, "rate", "must be >= 0");
      }
      const bool jd = std::find(combiners.begin(), combiners.end(), Combiner::kJD) !=
                      combiners.end();
      if (jd && has(methods_used, Method::kExact)) {
        require(max_n <= kMaxQuadratureLinks, "n-links",
                "exact JD outage supports at most " + std::to_string(kMaxQuadratureLinks) +
                    " links (use --method mc)");
      }
      if (jd && has(methods_used, Method::kBound) && !distances.empty()) {
        for (int n : n_links) {
          const auto d = link_distances(*this, n);
          require(std::all_of(d.begin(), d.end(), [&](double v) { return v == d[0]; }),
                  "distances", "the JD lower bound needs equal distances");
        }
      }
      break;
    }
    case Metric::kThroughput: {
      require(!combiners.empty(), "combiner", "at least one combiner is required");
      require_axis({XAxis::kSnrDb});
      require_methods(throughput_method_applies, combiners);
      const bool jd = std::find(combiners.begin(), combiners.end(), Combiner::kJD) !=
                      combiners.end();
      if (jd && has(methods_used, Method::kExact)) {
        require(max_n <= kMaxQuadratureLinks, "n-links",
                "exact JD throughput supports at most " +
                    std::to_string(kMaxQuadratureLinks) + " links");
      }
      break;
    }
    case Metric::kGainMcoSco: {
      require_axis({XAxis::kRate, XAxis::kOutageTarget});
      for (Method m : methods_used) {
        require(m == Method::kExact || m == Method::kAsymptotic, "method",
                "gain-mco-sco supports exact and asymptotic");
      }
      if (x_axis == XAxis::kRate) {
        require(range.start > 0.0, "range", "rate range must start above 0");
      } else {
        require(range.start > 0.0 && range.stop < 1.0, "range",
                "outage targets must lie in (0, 1)");
        require(rate > 0.0, "rate", "must be > 0");
      }
      break;
    }
    case Metric::kGainJdVs: {
      require_axis({XAxis::kRate});
      require(range.start > 0.0, "range", "rate range must start above 0");
      require(!combiners.empty(), "combiner", "reference combiners sc and/or mrc required");
      for (Combiner c : combiners) {
        require(c == Combiner::kSC || c == Combiner::kMRC, "combiner",
                "gain-jd references must be sc or mrc");
      }
      for (int n : n_links) require(n >= 2, "n-links", "gain-jd needs n >= 2");
      for (Method m : methods_used) {
        require(m == Method::kExact, "method", "gain-jd supports exact only");
      }
      break;
    }
    case Metric::kDmt: {
      require(!combiners.empty(), "combiner", "at least one combiner is required");
      require_axis({XAxis::kMultiplexingGain});
      require(range.start >= 0.0, "range", "multiplexing gain must be >= 0");
      for (Method m : methods_used) {
        require(m == Method::kExact || m == Method::kAsymptotic, "method",
                "dmt supports exact (analytic) and asymptotic (empirical)");
      }
      for (Combiner c : combiners) {
        if (c == Combiner::kSCo) {
          for (int n : n_links) require(n == 1, "combiner", "sco dmt needs n = 1");
        }
      }
      require(dmt_snr_grid.steps >= 2 && dmt_snr_grid.stop - dmt_snr_grid.start >= 40.0,
              "dmt-snr-range", "must span at least 40 dB with >= 2 points");
      break;
    }
  }
}

CsvTable run_outage_sweep(const SweepSpec& spec, unsigned workers) {
  spec.validate();
  if (spec.metric != Metric::kOutage) throw ValidationError("metric: expected outage");
  const auto methods = effective_methods(spec);

  struct Column {
    Combiner combiner;
    Method method;
  };
  std::vector<Column> columns;
  std::vector<std::string> header{"n_links", "snr_db", "rate"};
  for (Combiner c : spec.combiners) {
    for (Method m : kMethodOrder) {
      if (!has(methods, m) || !outage_method_applies(c, m)) continue;
      columns.push_back({c, m});
      header.push_back(column_name(c, to_string(m)));
      if (m == Method::kMonteCarlo) header.push_back(column_name(c, "mc_ci"));
    }
  }

  struct Point {
    int n;
    double snr_db, rate;
  };
  std::vector<Point> points;
  for (int n : spec.n_links) {
    for (double x : spec.range.points()) {
      if (spec.x_axis == XAxis::kSnrDb) {
        points.push_back({n, x, spec.rate});
      } else {
        points.push_back({n, std::numeric_limits<double>::quiet_NaN(), x});
      }
    }
  }
  // Rate sweeps without an SNR axis run at 20 dB system SNR.
  constexpr double kDefaultSnrDb = 20.0;

  auto rows = evaluate(points.size(), workers, [&](std::size_t i) {
    const Point& p = points[i];
    const double snr_db = std::isnan(p.snr_db) ? kDefaultSnrDb : p.snr_db;
    const double total = db_to_linear(snr_db);
    const auto d = link_distances(spec, p.n);
    const auto mco = average_snrs(equal_power_topology(total, d, spec.eta, spec.bandwidth_hz));
    const std::vector<double> d1{d[0]};
    const auto sco = average_snrs(equal_power_topology(total, d1, spec.eta, spec.bandwidth_hz));

    Row row;
    row.cells = {std::to_string(p.n), fmt(snr_db), fmt(p.rate)};
    for (std::size_t ci = 0; ci < columns.size(); ++ci) {
      const Column& col = columns[ci];
      const auto& snrs = col.combiner == Combiner::kSCo ? sco : mco;
      const std::string name = column_name(col.combiner, to_string(col.method));
      OutageEstimate e;
      switch (col.method) {
        case Method::kExact:
          if (col.combiner == Combiner::kJD) {
            e = snrs.size() == 1
                    ? outage_exact_closed(Combiner::kSCo, snrs, p.rate)
                    : outage_jd_quadrature(snrs, p.rate, 1e-8);
          } else {
            e = outage_exact_closed(col.combiner, snrs, p.rate);
          }
          break;
        case Method::kAsymptotic:
          e = outage_asymptotic(col.combiner, snrs, p.rate);
          break;
        case Method::kBound:
          e = col.combiner == Combiner::kJD
                  ? outage_jd_lower_bound_tse(snrs[0], static_cast<int>(snrs.size()), p.rate)
                  : mrc_simplex_bound(snrs, p.rate);
          break;
        case Method::kMonteCarlo:
          e = outage_monte_carlo(col.combiner, snrs, p.rate, spec.mc_samples,
                                 cell_seed(spec.seed, i, ci), 1);
          break;
      }
      row.cells.push_back(fmt(e.value));
      if (col.method == Method::kMonteCarlo) row.cells.push_back(fmt(*e.ci_half_width));
      if (e.saturated) row.flags.push_back(name + ":saturated");
      if (e.low_event_count) row.flags.push_back(name + ":low-events");
    }
    return row;
  });
  return assemble(std::move(header), std::move(rows));
}

CsvTable run_throughput_sweep(const SweepSpec& spec, unsigned workers) {
  spec.validate();
  if (spec.metric != Metric::kThroughput) {
    throw ValidationError("metric: expected throughput");
  }
  const auto methods = effective_methods(spec);
  struct Column {
    Combiner combiner;
    Method method;
    bool lambert;
  };
  std::vector<Column> columns;
  std::vector<std::string> header{"n_links", "snr_db", "p_out"};
  for (Combiner c : spec.combiners) {
    if (has(methods, Method::kExact)) {
      columns.push_back({c, Method::kExact, false});
      header.push_back(column_name(c, "exact"));
    }
    if (has(methods, Method::kAsymptotic)) {
      columns.push_back({c, Method::kAsymptotic, false});
      header.push_back(column_name(c, "asymptotic"));
      if (c == Combiner::kJD) {
        columns.push_back({c, Method::kAsymptotic, true});
        header.push_back(column_name(c, "asymptotic_approx"));
      }
    }
  }
  struct Point {
    int n;
    double p_out, snr_db;
  };
  std::vector<Point> points;
  for (int n : spec.n_links) {
    for (double p : spec.outages) {
      for (double x : spec.range.points()) points.push_back({n, p, x});
    }
  }
  auto rows = evaluate(points.size(), workers, [&](std::size_t i) {
    const Point& p = points[i];
    const double total = db_to_linear(p.snr_db);
    const auto d = link_distances(spec, p.n);
    const auto mco = equal_power_topology(total, d, spec.eta, spec.bandwidth_hz);
    const std::vector<double> d1{d[0]};
    const auto sco = equal_power_topology(total, d1, spec.eta, spec.bandwidth_hz);
    Row row;
    row.cells = {std::to_string(p.n), fmt(p.snr_db), fmt(p.p_out)};
    for (const Column& col : columns) {
      const Topology& topo = col.combiner == Combiner::kSCo ? sco : mco;
      const std::string name = col.lambert ? column_name(col.combiner, "asymptotic_approx")
                                           : column_name(col.combiner, to_string(col.method));
      try {
        ThroughputResult r;
        if (col.method == Method::kExact) {
          r = exact_throughput(col.combiner, topo, p.p_out);
        } else {
          r = asymptotic_throughput(
              col.combiner, topo, p.p_out,
              col.lambert ? InverseMode::kLambertApprox : InverseMode::kRefined);
        }
        row.cells.push_back(fmt(r.throughput));
      } catch (const DomainError&) {
        // Outside the approximation's validity (zeta < e) or the bisection
        // bracket; the cell is kept so every row has the same columns.
        row.cells.push_back("nan");
        row.flags.push_back(name + ":undefined");
      }
    }
    return row;
  });
  return assemble(std::move(header), std::move(rows));
}

CsvTable run_gain_sweep(const SweepSpec& spec, unsigned workers) {
  spec.validate();
  const auto methods = effective_methods(spec);
  if (spec.metric == Metric::kGainJdVs) {
    std::vector<std::string> header{"n_links", "rate"};
    for (Combiner c : spec.combiners) {
      header.push_back("jd_vs_" + std::string(to_string(c)) + "_db");
    }
    struct Point {
      int n;
      double rate;
    };
    std::vector<Point> points;
    for (int n : spec.n_links) {
      for (double x : spec.range.points()) points.push_back({n, x});
    }
    auto rows = evaluate(points.size(), workers, [&](std::size_t i) {
      Row row;
      row.cells = {std::to_string(points[i].n), fmt(points[i].rate)};
      for (Combiner c : spec.combiners) {
        row.cells.push_back(
            fmt(linear_to_db(snr_gain_jd_vs(c, points[i].n, points[i].rate))));
      }
      return row;
    });
    return assemble(std::move(header), std::move(rows));
  }
  if (spec.metric != Metric::kGainMcoSco) throw ValidationError("metric: expected a gain");

  std::vector<std::string> header{"n_links", "rate", "p_out"};
  if (has(methods, Method::kExact)) header.push_back("gain_db");
  if (has(methods, Method::kAsymptotic)) header.push_back("gain_approx_db");
  struct Point {
    int n;
    double rate, p_out;
  };
  std::vector<Point> points;
  for (int n : spec.n_links) {
    if (spec.x_axis == XAxis::kRate) {
      for (double p : spec.outages) {
        for (double x : spec.range.points()) points.push_back({n, x, p});
      }
    } else {
      for (double x : spec.range.points()) points.push_back({n, spec.rate, x});
    }
  }
  auto rows = evaluate(points.size(), workers, [&](std::size_t i) {
    const Point& p = points[i];
    GainQuery q = GainQuery::unit(p.n, p.rate, p.p_out);
    q.eta = spec.eta;
    if (!spec.distances.empty()) q.distances = link_distances(spec, p.n);
    Row row;
    row.cells = {std::to_string(p.n), fmt(p.rate), fmt(p.p_out)};
    if (has(methods, Method::kExact)) {
      row.cells.push_back(fmt(linear_to_db(snr_gain_mco_sco(q))));
    }
    if (has(methods, Method::kAsymptotic)) {
      row.cells.push_back(fmt(linear_to_db(snr_gain_mco_sco_approx(q))));
    }
    return row;
  });
  return assemble(std::move(header), std::move(rows));
}

CsvTable run_dmt_sweep(const SweepSpec& spec, unsigned workers) {
  spec.validate();
  if (spec.metric != Metric::kDmt) throw ValidationError("metric: expected dmt");
  const auto methods = effective_methods(spec);
  std::vector<std::string> header{"n_links", "multiplexing_gain"};
  for (Combiner c : spec.combiners) {
    if (has(methods, Method::kExact)) header.push_back(column_name(c, "analytic"));
    if (has(methods, Method::kAsymptotic)) header.push_back(column_name(c, "empirical"));
  }
  struct Point {
    int n;
    double r;
  };
  std::vector<Point> points;
  for (int n : spec.n_links) {
    for (double x : spec.range.points()) points.push_back({n, x});
  }
  const auto grid = spec.dmt_snr_grid.points();
  auto rows = evaluate(points.size(), workers, [&](std::size_t i) {
    const Point& p = points[i];
    Row row;
    row.cells = {std::to_string(p.n), fmt(p.r)};
    for (Combiner c : spec.combiners) {
      const double r_max = c == Combiner::kJD ? p.n : 1.0;
      const bool inside = p.r <= r_max;
      if (!inside) row.flags.push_back(std::string(to_string(c)) + ":out-of-range");
      if (has(methods, Method::kExact)) {
        row.cells.push_back(inside ? fmt(dmt(c, p.r, p.n).diversity_gain) : "nan");
      }
      if (has(methods, Method::kAsymptotic)) {
        row.cells.push_back(inside ? fmt(dmt_empirical(c, p.r, p.n, grid)) : "nan");
      }
    }
    return row;
  });
  return assemble(std::move(header), std::move(rows));
}

CsvTable run_sweep(const SweepSpec& spec, unsigned workers) {
  switch (spec.metric) {
    case Metric::kOutage:
      return run_outage_sweep(spec, workers);
    case Metric::kThroughput:
      return run_throughput_sweep(spec, workers);
    case Metric::kGainMcoSco:
    case Metric::kGainJdVs:
      return run_gain_sweep(spec, workers);
    case Metric::kDmt:
      return run_dmt_sweep(spec, workers);
  }
  throw ValidationError("metric: unknown");
}

std::optional<SweepSpec> sweep_preset(std::string_view name) {
  SweepSpec s;
  if (name == "fig2a") {
    s.metric = Metric::kOutage;
    s.combiners = {Combiner::kJD, Combiner::kSCo};
    s.n_links = {2, 3, 5};
    s.x_axis = XAxis::kSnrDb;
    s.range = {0.0, 40.0, 41};
    s.rate = 0.5;
    s.methods = {Method::kMonteCarlo, Method::kAsymptotic, Method::kBound};
    return s;
  }
  if (name == "fig2b") {
    s.metric = Metric::kThroughput;
    s.combiners = {Combiner::kJD, Combiner::kSCo};
    s.n_links = {2, 3, 5};
    s.x_axis = XAxis::kSnrDb;
    s.range = {0.0, 60.0, 61};
    s.outages = {1e-3};
    s.bandwidth_hz = 20e6;
    s.methods = {Method::kAsymptotic};
    return s;
  }
  if (name == "fig3a") {
    s.metric = Metric::kGainMcoSco;
    s.n_links = {2, 3, 4};
    s.x_axis = XAxis::kRate;
    s.range = {0.5, 25.0, 50};
    s.outages = {1e-3, 1e-5};
    s.methods = {Method::kExact};
    return s;
  }
  if (name == "fig3b") {
    s.metric = Metric::kGainJdVs;
    s.combiners = {Combiner::kSC, Combiner::kMRC};
    s.n_links = {2, 3, 4};
    s.x_axis = XAxis::kRate;
    s.range = {0.5, 25.0, 50};
    s.methods = {Method::kExact};
    return s;
  }
  if (name == "dmt") {
    s.metric = Metric::kDmt;
    s.combiners = {Combiner::kJD, Combiner::kSC, Combiner::kMRC};
    s.n_links = {2, 3};
    s.x_axis = XAxis::kMultiplexingGain;
    s.range = {0.0, 3.0, 13};
    s.methods = {Method::kExact, Method::kAsymptotic};
    return s;
  }
  return std::nullopt;
}

std::vector<std::string> sweep_preset_names() {
  return {"fig2a", "fig2b", "fig3a", "fig3b", "dmt"};
}

std::string gnuplot_script(const CsvTable& table, const std::string& data_file,
                           const std::string& x_column, bool log_y) {
  std::set<std::string> link_counts;
  for (const auto& r : table.rows) link_counts.insert(r.front());
  std::ostringstream os;
  os << "set datafile separator ','\n"
     << "set xlabel '" << x_column << "'\n"
     << "set grid\n";
  if (log_y) os << "set logscale y\n";
  os << "plot \\\n";
  bool first = true;
  for (const auto& name : table.header) {
    if (name == "n_links" || name == "snr_db" || name == "rate" || name == "p_out" ||
        name == "multiplexing_gain" || name == "flags" ||
        (name.size() >= 3 && name.compare(name.size() - 3, 3, "_ci") == 0)) {
      continue;
    }
    for (const auto& n : link_counts) {
      if (!first) os << ", \\\n";
      first = false;
      os << "  '" << data_file << "' skip 1 using (column(1)==" << n << " ? column('"
         << x_column << "') : 1/0):(column('" << name << "')) with lines title '" << name
         << " N=" << n << "'";
    }
  }
  os << "\n";
  return os.str();
}

}  // namespace mcoutage
