// Copyright 2026 The bondauction Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// One line per acceptance criterion. Exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bondauction/clearing.hpp"
#include "bondauction/equilibrium.hpp"
#include "bondauction/experiments.hpp"
#include "bondauction/output.hpp"
#include "bondauction/reports.hpp"
#include "bondauction/scenario.hpp"
#include "bondauction/verification.hpp"

using namespace bondauction;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s  criterion %2d  %-28s %9.3f ms  %s\n", o.pass ? "PASS" : "FAIL", id, title, ms,
              o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* spec, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, spec, a, b, c);
  return buf;
}

const MarketParams kRaw{0.08, 0.34, 10, 0.04, 0.0, 0.06, 0.1};
const MarketParams kAggregate{0.08, 0.034, 10, 0.04, 0.0, 0.06, 0.1};
const AllocationFn kExampleAlloc = AllocationFn::through(0.1, 0.1, 0.169, 0.148);
const std::string kDir = BONDAUCTION_SCENARIO_DIR;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  criterion(1, "worked-example bid", [] {
    const auto t0 = Clock::now();
    const EquilibriumPoint e = equilibrium_bid(0.169, 0.1, kExampleAlloc, kRaw);
    const double ms = elapsed_ms(t0);
    const bool ok = std::fabs(e.bid - 0.07138) < 5e-5 && std::fabs(e.bid - 0.0711) < 5e-4 && ms < 1.0;
    return Outcome{ok, fmt("b* = %.7f (published 0.0711), call took %.4f ms", e.bid, ms)};
  });

  criterion(2, "symmetric stop-out", [] {
    const AuctionOutcome o = clear(std::vector<BidPoint>(10, {0.1, 0.046, 0}), kAggregate);
    bool equal = o.allocations.size() == 10;
    for (double a : o.allocations) equal = equal && std::fabs(a - 0.1) < 1e-12;
    CampaignSpec spec;
    spec.params = kAggregate;
    spec.dist.kind = DistributionKind::kPointMass;
    spec.dist.budget = {0.1, 0.1};
    spec.dist.risk_limit = {0.046, 0.046};
    spec.c_ell = 0.1;
    spec.c_bar = 0.2;
    spec.alloc = kExampleAlloc;
    spec.replicates = 200;
    spec.seed = 1;
    const CampaignResult r = run_campaign(spec);
    const bool ok = o.issued && std::fabs(o.stop_out - 0.046) <= 1e-12 && equal &&
                    r.summary.issuance_rate == 1.0 &&
                    std::fabs(r.summary.max_stop_out - 0.046) <= 1e-12 &&
                    std::fabs(r.summary.min_stop_out - 0.046) <= 1e-12;
    return Outcome{ok, fmt("r_hat = %.17g, campaign issuance rate %.3f", o.stop_out,
                           r.summary.issuance_rate)};
  });

  criterion(3, "residual supply", [] {
    const double b = equilibrium_bid(0.169, 0.1, kExampleAlloc, kRaw).bid;
    const double residual = 1.0 - 10 * b;
    return Outcome{std::fabs(residual - 0.2862) <= 0.01 && std::fabs(residual - 0.28) <= 0.01,
                   fmt("1 - n b* = %.4f (published 0.28)", residual)};
  });

  criterion(4, "xi-condition audit", [] {
    const XiResult x = xi(kRaw);
    const ScenarioConfig c = parse_scenario(paper_example_scenario_text());
    const PaperExampleReport rep = paper_example_report(c);
    bool warned = false;
    for (const auto& w : c.warnings) warned = warned || w.find("xi = 8.5") != std::string::npos;
    const bool ok = std::fabs(x.value - 8.5) < 1e-12 && std::fabs(x.threshold - 1.0) < 1e-12 &&
                    !x.condition_holds && rep.xi_violated &&
                    rep.text.find("FLAG xi >= 1/(lambda n) = 1") != std::string::npos &&
                    rep.text.find("WARNING: xi condition violated") != std::string::npos && warned;
    return Outcome{ok, fmt("xi = %.3g vs 1/(lambda n) = %.3g, flagged in report", x.value,
                           x.threshold)};
  });

  criterion(5, "ODE oracle", [] {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const AllocationFn identity(1.0, 0.0);
    double worst_a = 0.0, worst_fd = 0.0;
    const auto t0 = Clock::now();
    for (int set = 0; set < 3; ++set) {
      MarketParams p;
      p.bidders = 3 + static_cast<int>(u(gen) * 10);
      p.junk_yield = 0.06 + 0.06 * u(gen);
      p.expected_resale_yield = 0.02 + (p.junk_yield - 0.03) * u(gen);
      p.risk_free = 0.5 * p.expected_resale_yield;
      p.yield_cap = 0.5 * (p.expected_resale_yield + p.junk_yield);
      p.min_bid = (0.2 + 0.6 * u(gen)) / p.bidders;
      const double limit = (p.junk_yield - p.expected_resale_yield) / (p.min_bid * p.bidders);
      p.sensitivity = (0.1 + 0.8 * u(gen)) * limit;
      if (!validate_params(p).empty() || !xi(p).condition_holds) {
        return Outcome{false, "random parameter set is invalid"};
      }
      const double c_ell = 0.05 + 0.3 * u(gen);
      const auto grid = linspace(c_ell, c_ell + 0.5, 1000);
      worst_a = std::max(worst_a, ode_residual(grid, c_ell, identity, p));
      worst_fd = std::max(
          worst_fd, ode_residual(grid, c_ell, identity, p, DerivativeMode::kFiniteDifference, 1e-5));
    }
    const double ms = elapsed_ms(t0);
    return Outcome{worst_a < 1e-12 && worst_fd < 1e-6 && ms < 100.0,
                   fmt("analytic %.2e, finite difference %.2e, %.2f ms", worst_a, worst_fd, ms)};
  });

  criterion(6, "stop-out identity", [] {
    const AllocationFn identity(1.0, 0.0);
    const auto thetas = linspace(0.002, 0.03, 10);
    const auto lambdas = linspace(0.01, 0.12, 10);
    const auto weights = linspace(0.05, 1.0, 10);
    double worst = 0.0;
    int checked = 0;
    for (double th : thetas) {
      for (double la : lambdas) {
        for (double w : weights) {
          MarketParams p{0.08, th, 10, 0.04, 0.0, 0.06, la};
          if (!xi(p).condition_holds) return Outcome{false, "grid point violates the xi condition"};
          const double c_star = 0.5, c_ell = w * c_star;
          const double b = equilibrium_bid(c_star, c_ell, identity, p).bid;
          const double r = symmetric_stop_out(c_star, c_ell, identity, p);
          worst = std::max(worst, std::fabs(r - (p.junk_yield - th * p.bidders * b)));
          ++checked;
        }
      }
    }
    return Outcome{worst < 1e-12 && checked == 1000,
                   fmt("max |difference| %.2e over %.0f points", worst, checked)};
  });

  criterion(7, "best-response property", [] {
    const auto t0 = Clock::now();
    double worst_gap = 0.0, worst_foc = 0.0, worst_so = 0.0;
    bool clean = true;
    for (int n : {3, 4, 5}) {
      const ScenarioConfig c =
          load_scenario(kDir + "/two_point.scenario", {{"market.n", std::to_string(n)}});
      if (!c.xi_condition_holds()) return Outcome{false, "scenario violates the xi condition"};
      for (VerifyKind k : {VerifyKind::kBestResponse, VerifyKind::kFoc, VerifyKind::kSecondOrder}) {
        const VerifyReport r = run_verification(c, k);
        clean = clean && r.passed && !r.precondition_violated && r.diagnostics == 0;
        double& slot = k == VerifyKind::kBestResponse ? worst_gap
                       : k == VerifyKind::kFoc        ? worst_foc
                                                      : worst_so;
        slot = std::max(slot, r.value);
      }
    }
    const double ms = elapsed_ms(t0);
    const bool ok = clean && worst_gap <= 1e-5 && worst_foc < 1e-6 && worst_so < 1e-4 && ms < 30000;
    return Outcome{ok, fmt("n=3..5: gap %.1e, FOC %.1e, second difference %.1e", worst_gap,
                           worst_foc, worst_so)};
  });

  criterion(8, "comparative statics", [] {
    SweepSpec th;
    th.axis = SweepAxis::kTheta;
    th.values = linspace(0.01, 0.08, 50);
    th.baseline = {0.10, 0.02, 4, 0.04, 0.01, 0.07, 0.2};
    th.c_ell = 0.65;
    th.c_star = 0.8;
    th.alloc = AllocationFn(1.0, 0.0);
    const SweepTable a = run_sweep(th);

    SweepSpec ce = th;
    ce.axis = SweepAxis::kCEll;
    ce.values = linspace(0.3, 0.8, 50);
    ce.baseline.min_bid = 0.5;
    const SweepTable b = run_sweep(ce);
    const bool ok = a.rows.size() == 50 && a.bids_strictly_decreasing && b.rows.size() == 50 &&
                    b.bids_approach_lambda && b.bids_strictly_decreasing &&
                    b.rows.back().bid == 0.5;
    return Outcome{ok, fmt("theta sweep bids %.4f -> %.4f; c_ell sweep ends at %.17g (lambda 0.5)",
                           a.rows.front().bid, a.rows.back().bid, b.rows.back().bid)};
  });

  criterion(9, "clearing invariants", [] {
    std::mt19937_64 gen(9);
    std::uniform_int_distribution<int> count(2, 15);
    std::uniform_real_distribution<double> qty(0.0, 0.4);
    std::uniform_int_distribution<int> level(0, 6);
    const MarketParams p{0.12, 0.01, 15, 0.02, 0.0, 0.06, 0.05};
    const auto t0 = Clock::now();
    int cases = 0, issued = 0, broken = 0;
    for (; cases < 20000; ++cases) {
      std::vector<BidPoint> bids(static_cast<std::size_t>(count(gen)));
      for (std::size_t i = 0; i < bids.size(); ++i) bids[i] = {qty(gen), 0.02 + 0.004 * level(gen), i};
      const AuctionOutcome o = clear(bids, p);
      bool ok = o.allocations.size() == bids.size();
      for (std::size_t i = 0; i < bids.size(); ++i) ok = ok && o.allocations[i] <= bids[i].quantity;
      if (o.aggregate_demand >= 1.0) {
        ++issued;
        ok = ok && o.issued && std::fabs(exact_sum(o.allocations) - 1.0) <= 1e-12;
        ok = ok && o.stop_out == stop_out_yield(o.aggregate_demand, p);
        // Winners all sit at or below the marginal yield; bids above it get nothing.
        for (std::size_t i = 0; i < bids.size(); ++i) {
          if (o.allocations[i] > 0.0) ok = ok && bids[i].yield <= o.marginal_yield;
          if (bids[i].yield > o.marginal_yield) ok = ok && o.allocations[i] == 0.0;
        }
      } else {
        ok = ok && !o.issued && o.stop_out == 0.0;
        for (double a : o.allocations) ok = ok && a == 0.0;
      }
      std::vector<std::size_t> perm(bids.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), gen);
      std::vector<BidPoint> shuffled;
      for (auto i : perm) shuffled.push_back(bids[i]);
      const AuctionOutcome s = clear(shuffled, p);
      ok = ok && s.stop_out == o.stop_out && s.issued == o.issued;
      for (std::size_t k = 0; k < perm.size(); ++k) {
        ok = ok && std::fabs(s.allocations[k] - o.allocations[perm[k]]) <= 1e-15;
      }
      broken += !ok;
    }
    const double ms = elapsed_ms(t0);
    return Outcome{broken == 0 && cases >= 10000 && ms < 10000,
                   fmt("%.0f cases (%.0f issued), %.0f violations", cases, issued, broken)};
  });

  criterion(10, "determinism", [] {
    namespace fs = std::filesystem;
    const fs::path root = fs::temp_directory_path() / "bondauction_acceptance";
    fs::remove_all(root);
    std::vector<std::string> texts;
    for (unsigned workers : {1u, 3u, 1u}) {
      ScenarioConfig c = load_scenario(kDir + "/uniform_truthful.scenario",
                                       {{"run.workers", std::to_string(workers)}});
      const fs::path dir = root / std::to_string(texts.size());
      const CampaignResult r = run_campaign(c.campaign_spec());
      const std::string csv = emit_campaign(r, OutputFormat::kCsv, dir.string());
      const std::string jsonl = emit_campaign(r, OutputFormat::kJsonLines, dir.string());
      const ScenarioConfig sc = load_scenario(kDir + "/theta_sweep.scenario");
      const std::string sweep = emit_sweep(run_sweep(sc.sweep_spec()), OutputFormat::kCsv,
                                           dir.string());
      texts.push_back(read_file(csv) + read_file(jsonl) + read_file(sweep));
    }
    const bool ok = !texts[0].empty() && texts[0] == texts[1] && texts[1] == texts[2];
    fs::remove_all(root);
    return Outcome{ok, fmt("%.0f bytes identical across runs and worker counts 1, 3, 1",
                           static_cast<double>(texts[0].size()))};
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures == 0 ? 0 : 1;
}
