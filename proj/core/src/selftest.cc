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

#include "mcoutage/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "mcoutage/error.hpp"
#include "mcoutage/gains_dmt.hpp"
#include "mcoutage/outage.hpp"
#include "mcoutage/special_functions.hpp"

namespace mcoutage {
namespace {

class Suite {
 public:
  template <class Fn>
  void check(const std::string& name, Fn&& fn) {
    SelftestCheck c{name, false, {}};
    std::ostringstream detail;
    try {
      c.passed = fn(detail);
    } catch (const std::exception& e) {
      c.passed = false;
      detail << "exception: " << e.what();
    }
    c.detail = detail.str();
    report_.checks.push_back(std::move(c));
  }
  SelftestReport take() { return std::move(report_); }

 private:
  SelftestReport report_;
};

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

bool SelftestReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SelftestCheck& c) { return c.passed; });
}

SelftestReport run_selftest(const SelftestOptions& opt) {
  Suite suite;
  const double rates[] = {0.5, 1.0, 2.0};

  suite.check("coding-constant-branches", [&](std::ostream& d) {
    double worst = 0.0;
    for (int n = 2; n <= 6; ++n) {
      for (double r : {0.5, 2.0, 4.0}) {
        worst = std::max(worst, rel_diff(detail::coding_constant_tail_series(n, r),
                                         detail::coding_constant_closed_form(n, r)));
      }
    }
    d << "max rel diff " << worst;
    return worst < 1e-8;
  });

  // At 50 dB per link the asymptote is accurate to well under 1%.
  suite.check("quadrature-vs-asymptote", [&](std::ostream& d) {
    double lo = 1e300, hi = 0.0;
    for (int n = 2; n <= 4; ++n) {
      const std::vector<double> avg(static_cast<std::size_t>(n), 1e5);
      for (double r : rates) {
        const double q = outage_jd_quadrature(avg, r, 1e-9).value;
        const double a = outage_asymptotic(Combiner::kJD, avg, r).value * opt.asymptote_scale;
        lo = std::min(lo, q / a);
        hi = std::max(hi, q / a);
      }
    }
    d << "ratio range [" << lo << ", " << hi << "]";
    return lo >= 0.99 && hi <= 1.01;
  });

  suite.check("quadrature-vs-monte-carlo", [&](std::ostream& d) {
    std::uint64_t seed = opt.seed;
    double worst = 0.0;
    for (int n = 2; n <= 3; ++n) {
      for (double r : {0.5, 2.0}) {
        std::vector<double> avg;
        for (int i = 0; i < n; ++i) avg.push_back(3.0 + 2.0 * i);
        const double q = outage_jd_quadrature(avg, r).value;
        const auto mc = outage_monte_carlo(Combiner::kJD, avg, r, opt.mc_samples, ++seed);
        worst = std::max(worst, std::abs(mc.value - q) / *mc.ci_half_width);
      }
    }
    d << "max deviation " << worst << " CI";
    return worst <= 4.0;
  });

  // The asymptote is approached monotonically as SNR grows.
  suite.check("asymptote-convergence", [&](std::ostream& d) {
    bool monotone = true;
    double prev = 0.0, last = 0.0;
    for (double snr : {1e2, 1e3, 1e4, 1e5, 1e6}) {
      const std::vector<double> avg{snr, 2.0 * snr, 0.5 * snr};
      const double q = outage_jd_quadrature(avg, 1.0, 1e-9).value;
      last = q / (outage_asymptotic(Combiner::kJD, avg, 1.0).value * opt.asymptote_scale);
      monotone = monotone && last > prev;
      prev = last;
    }
    d << "ratio at 60 dB " << last << (monotone ? ", monotone" : ", not monotone");
    return monotone && std::abs(last - 1.0) < 1e-3;
  });

  suite.check("closed-forms-vs-monte-carlo", [&](std::ostream& d) {
    struct Case {
      Combiner c;
      std::vector<double> avg;
      double rate;
    };
    const std::vector<Case> cases{
        {Combiner::kSC, {2.0, 5.0, 9.0}, 1.5},
        {Combiner::kMRC, {4.0, 4.0, 4.0}, 2.0},
        {Combiner::kMRC, {1.0, 3.0, 6.0}, 2.0},
        {Combiner::kSCo, {8.0}, 1.0},
    };
    double worst = 0.0;
    std::uint64_t seed = opt.seed + 1000;
    for (const auto& k : cases) {
      const double e = outage_exact_closed(k.c, k.avg, k.rate).value;
      const auto mc = outage_monte_carlo(k.c, k.avg, k.rate, opt.mc_samples, ++seed);
      worst = std::max(worst, std::abs(mc.value - e) / *mc.ci_half_width);
    }
    d << "max deviation " << worst << " CI";
    return worst <= 4.0;
  });

  suite.check("bound-ordering", [&](std::ostream& d) {
    int violations = 0;
    for (int n = 2; n <= 3; ++n) {
      for (double snr : {1.0, 10.0, 100.0}) {
        const std::vector<double> avg(static_cast<std::size_t>(n), snr);
        for (double r : rates) {
          const double q = outage_jd_quadrature(avg, r).value;
          const double lb = outage_jd_lower_bound_tse(snr, n, r).value;
          const double mrc = outage_exact_closed(Combiner::kMRC, avg, r).value;
          const double ub = mrc_simplex_bound(avg, r).value;
          if (lb > q * (1 + 1e-9) || q > 1.0 || mrc > ub * (1 + 1e-12)) ++violations;
        }
      }
    }
    d << violations << " violations";
    return violations == 0;
  });

  suite.check("inverse-round-trip", [&](std::ostream& d) {
    double worst = 0.0;
    for (int n : {1, 2, 3, 5}) {
      for (double y : {1e-3, 1.0, 1e3, 1e9}) {
        const double r = coding_constant_inverse(n, y);
        worst = std::max(worst, rel_diff(coding_constant(n, r), y));
      }
    }
    d << "max rel error " << worst;
    return worst < 1e-8;
  });

  suite.check("gain-consistency", [&](std::ostream& d) {
    double worst = 0.0;
    for (int n = 2; n <= 5; ++n) {
      for (double r : {0.5, 4.0, 16.0}) {
        const double ratio =
            snr_gain_jd_vs(Combiner::kSC, n, r) / snr_gain_jd_vs(Combiner::kMRC, n, r);
        worst = std::max(worst, rel_diff(ratio, std::exp(log_factorial(n) / n)));
      }
    }
    d << "max rel error " << worst;
    return worst < 1e-9;
  });

  return suite.take();
}

void print_report(const SelftestReport& report, std::ostream& out) {
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
  out << (report.all_passed() ? "selftest: all checks passed" : "selftest: FAILED") << '\n';
}

}  // namespace mcoutage
