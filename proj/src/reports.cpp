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

#include "bondauction/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bondauction/rng.hpp"

namespace bondauction {
namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string row(const std::string& a, const std::string& b, const std::string& c,
                const std::string& d, const std::string& e) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%-18s %-10s %-44s %-12s %s\n", a.c_str(), b.c_str(), c.c_str(),
                d.c_str(), e.c_str());
  return buf;
}

std::string brief(double v) { return fmt("%.10g", v); }

std::string percent(double v) { return fmt("%.4g%%", 100.0 * v); }

}  // namespace

const char* to_string(VerifyKind kind) {
  switch (kind) {
    case VerifyKind::kFoc: return "foc";
    case VerifyKind::kOde: return "ode";
    case VerifyKind::kBestResponse: return "bestresponse";
    case VerifyKind::kSecondOrder: return "second-order";
  }
  return "?";
}

VerifyKind verify_kind_from_string(const std::string& name) {
  if (name == "foc") return VerifyKind::kFoc;
  if (name == "ode") return VerifyKind::kOde;
  if (name == "bestresponse" || name == "best-response") return VerifyKind::kBestResponse;
  if (name == "second-order") return VerifyKind::kSecondOrder;
  throw Error(ErrorCode::kInvalidArgument, "unknown verification '" + name + "'");
}

VerifyReport run_verification(const ScenarioConfig& config, VerifyKind kind) {
  const RunConfig& run = config.run;
  const MandateConfig& m = config.mandate;
  VerifyReport r;
  r.kind = kind;
  r.c_star = m.c_star;
  switch (kind) {
    case VerifyKind::kOde: {
      const auto grid = linspace(m.c_ell, m.c_bar, run.ode_grid);
      const AllocationFn alloc = config.allocation_fn();
      r.value = ode_residual(grid, m.c_ell, alloc, config.market, DerivativeMode::kAnalytic);
      r.fd_value = ode_residual(grid, m.c_ell, alloc, config.market,
                                DerivativeMode::kFiniteDifference, run.ode_fd_step);
      r.tolerance = run.ode_tol;
      r.fd_tolerance = run.ode_fd_tol;
      r.grid_points = grid.size();
      r.precondition_violated = !config.xi_condition_holds();
      r.passed = r.value < r.tolerance && r.fd_value < r.fd_tolerance;
      return r;
    }
    case VerifyKind::kFoc:
    case VerifyKind::kSecondOrder: {
      const PayoffSetup setup = config.payoff_setup();
      const bool foc = kind == VerifyKind::kFoc;
      const DifferenceCheck d = foc ? foc_residual(m.c_star, setup, run.foc_step)
                                    : second_order_flatness(m.c_star, setup, run.second_order_step);
      r.value = std::fabs(d.value);
      r.tolerance = foc ? run.foc_tol : run.second_order_tol;
      r.payoff_at_star = d.payoff_at_star;
      r.diagnostics = d.diagnostics;
      r.precondition_violated = d.precondition_violated || !config.xi_condition_holds();
      r.passed = r.value < r.tolerance && r.diagnostics == 0;
      return r;
    }
    case VerifyKind::kBestResponse: {
      const PayoffSetup setup = config.payoff_setup();
      const auto grid = linspace(m.c_ell, m.c_bar, run.grid);
      const BestResponse b = best_response_search(grid, m.c_star, setup);
      r.value = b.relative_gap;
      r.tolerance = run.gap_tol;
      r.payoff_at_star = b.payoff_at_star;
      r.argmax = b.argmax;
      r.best_payoff = b.best_payoff;
      r.grid_points = grid.size();
      r.precondition_violated = b.precondition_violated || !config.xi_condition_holds();
      r.passed = r.value <= r.tolerance;
      return r;
    }
  }
  return r;
}

ProfileClearing clear_profile(const ScenarioConfig& config) {
  CampaignSpec spec = config.campaign_spec();
  const MarketParams& p = spec.params;
  ProfileClearing out;
  Rng rng(derive_seed(spec.seed, 0));
  std::size_t rejections = 0;
  for (int i = 0; i < p.bidders; ++i) {
    const BidderType t = draw_type(spec.dist, rng, rejections);
    BidPoint bid{0.0, std::clamp(t.risk_limit, p.risk_free, p.yield_cap),
                 static_cast<std::uint64_t>(i)};
    switch (spec.strategy) {
      case StrategyKind::kTruthfulBudget:
        bid.quantity = t.budget;
        break;
      case StrategyKind::kFixed:
        bid.quantity = spec.fixed_bid;
        break;
      case StrategyKind::kEquilibrium: {
        if (t.budget < spec.c_ell || t.budget > spec.c_bar) {
          throw Error(ErrorCode::kDomain, "sampled budget " + format_double(t.budget) +
                                              " lies outside [c_ell, c_bar]");
        }
        MarketParams q = p;
        q.min_bid = infimum_bid_for_risk_limit(t.risk_limit, p);
        bid.quantity = equilibrium_bid(t.budget, spec.c_ell, spec.alloc, q).bid;
        break;
      }
    }
    out.types.push_back(t);
    out.bids.push_back(bid);
  }
  out.outcome = clear(out.bids, p);
  return out;
}

const std::string& paper_example_scenario_text() {
  static const std::string text = R"(# Worked example with ten bidders sharing one market power.
# The sensitivity is the raw published value; the report also evaluates the
# stop-out with the sensitivity divided by n.

[market]
Theta = 0.08
theta = 0.34
n = 10
exp_rs = 0.04
r_f = 0.01
r_bar = 0.06

[mandate]
c_ell = 0.1
c_star = 0.169
c_bar = 0.2
lambda = 0.1

[allocation]
alpha_ell = 0.1
alpha_star = 0.148

[distribution]
kind = point-mass
c = 0.169
r_ell = 0.046

[run]
seed = 1
replicates = 100
strategy = equilibrium
)";
  return text;
}

PaperExampleReport paper_example_report(const ScenarioConfig& config) {
  constexpr double kPublishedBid = 0.0711;
  constexpr double kPublishedResidual = 0.28;
  constexpr double kPublishedStopOut = 0.046;

  PaperExampleReport rep;
  const MarketParams& raw = config.market;
  const int n = raw.bidders;
  const double lambda = config.mandate.lambda;

  const XiResult x = xi(raw);
  rep.xi = x.value;
  rep.xi_threshold = x.threshold;
  rep.xi_violated = !x.condition_holds;

  const EquilibriumPoint eq =
      equilibrium_bid(config.mandate.c_star, config.mandate.c_ell, config.allocation_fn(), raw);
  rep.bid = eq.bid;
  rep.residual_supply = 1.0 - n * eq.bid;

  MarketParams agg = raw;
  agg.sensitivity = raw.sensitivity / n;
  rep.aggregate_sensitivity = agg.sensitivity;
  std::vector<BidPoint> bids;
  for (int i = 0; i < n; ++i) bids.push_back({lambda, 0.0, static_cast<std::uint64_t>(i)});
  const double r_ell = agg.junk_yield - agg.sensitivity * n * lambda;
  for (auto& b : bids) b.yield = r_ell;
  const AuctionOutcome o = clear(bids, agg);
  rep.stop_out = o.stop_out;
  rep.issued = o.issued;
  rep.symmetric_allocations = o.allocations;

  const auto check = [](double computed, double published, double tol) {
    const double d = std::fabs(computed - published);
    return fmt("|diff| = %.2g", d) + (d <= tol ? fmt(" <= %g ok", tol) : fmt(" > %g MISMATCH", tol));
  };
  bool equal_allocations = true;
  for (double a : o.allocations) equal_allocations = equal_allocations && a == lambda;

  std::string t;
  t += "Worked example reconciliation\n";
  t += "inputs: Theta = " + brief(raw.junk_yield) + ", theta = " +
       brief(raw.sensitivity) + ", n = " + std::to_string(n) +
       ", E[r^s] = " + brief(raw.expected_resale_yield) +
       ", lambda = " + brief(lambda) +
       ", alpha(c_ell) = " + brief(config.allocation_fn()(config.mandate.c_ell)) +
       ", alpha(c*) = " + brief(config.allocation_fn()(config.mandate.c_star)) + "\n\n";
  t += row("quantity", "published", "convention", "computed", "check");
  t += row("xi", "-", "raw theta = " + brief(raw.sensitivity), fmt("%.6g", rep.xi),
           rep.xi_violated ? fmt("FLAG xi >= 1/(lambda n) = %.6g", rep.xi_threshold)
                           : fmt("ok xi < 1/(lambda n) = %.6g", rep.xi_threshold));
  t += row("equilibrium bid", fmt("%g", kPublishedBid), "raw theta in xi, w = alpha(c_ell)/alpha(c*)",
           fmt("%.7g", rep.bid), check(rep.bid, kPublishedBid, 5e-4));
  t += row("residual supply", fmt("%g", kPublishedResidual), "1 - n b*",
           fmt("%.7g", rep.residual_supply), check(rep.residual_supply, kPublishedResidual, 0.01));
  t += row("stop-out yield", percent(kPublishedStopOut),
           "theta/n = " + brief(agg.sensitivity) + ", n bids of lambda",
           percent(rep.stop_out), check(rep.stop_out, kPublishedStopOut, 1e-12));
  t += row("risk limit r_ell", percent(kPublishedStopOut), "Theta - (theta/n) n lambda",
           percent(r_ell), check(r_ell, kPublishedStopOut, 1e-12));
  t += row("allocation each", brief(lambda), "n bids of lambda",
           o.allocations.empty() ? "-" : fmt("%.7g", o.allocations.front()),
           equal_allocations ? "ok" : "MISMATCH");
  t += row("issuance", "issued", "D = n lambda", rep.issued ? "issued" : "not issued",
           rep.issued ? "ok" : "MISMATCH");
  t += "\nstop-out (decimal, 17 digits): " + format_double(rep.stop_out) + "\n";
  if (rep.xi_violated) {
    t += "WARNING: xi condition violated: xi = " + fmt("%.6g", rep.xi) + " >= 1/(lambda n) = " +
         fmt("%.6g", rep.xi_threshold) +
         " with the raw sensitivity; the bid above is the closed form evaluated outside the "
         "region where it is an equilibrium.\n";
  }
  rep.text = std::move(t);
  return rep;
}

}  // namespace bondauction
