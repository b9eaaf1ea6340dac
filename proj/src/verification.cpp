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

#include "bondauction/verification.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bondauction/clearing.hpp"
#include "bondauction/common.hpp"
#include "bondauction/quadrature.hpp"
#include "bondauction/rng.hpp"
#include "parallel.hpp"

namespace bondauction {
namespace {

constexpr std::size_t kPanelOrder = 16;

struct Sample {
  double value = 0.0;
  bool failed = false;
  bool violated = false;
  std::string message;
};

Sample integrand(double budget, double rival_risk_limit, const PayoffSetup& s) {
  Sample out;
  const MarketParams& p = s.params;
  try {
    const double lambda = infimum_bid_for_risk_limit(rival_risk_limit, p);
    MarketParams q = p;
    q.min_bid = lambda;
    out.violated = !xi(q).condition_holds;

    const double bid = s.strategy(budget, lambda);
    const double yield = std::clamp(rival_risk_limit, p.risk_free, p.yield_cap);
    std::vector<BidPoint> bids(static_cast<std::size_t>(p.bidders));
    for (std::size_t i = 0; i < bids.size(); ++i) bids[i] = {bid, yield, i};
    const AuctionOutcome o = clear(bids, p);
    if (o.issued) out.value = s.allocation(budget) * (o.stop_out - p.expected_resale_yield);
  } catch (const Error& e) {
    out.failed = true;
    out.message = e.what();
  }
  return out;
}

void absorb(PayoffEstimate& est, const Sample& s) {
  if (s.failed) {
    if (est.diagnostics == 0) est.first_diagnostic = s.message;
    ++est.diagnostics;
  }
  est.precondition_violated = est.precondition_violated || s.violated;
}

// Atoms or quadrature nodes/weights for the maximum of the rivals' risk limits.
void rival_max_rule(const PayoffSetup& s, std::vector<double>& x, std::vector<double>& w) {
  const TypeDistribution& d = s.dist;
  const Marginal& m = d.risk_limit;
  const double rivals = static_cast<double>(s.params.bidders - 1);
  x.clear();
  w.clear();
  switch (d.kind) {
    case DistributionKind::kPointMass:
      x = {m.lo};
      w = {1.0};
      return;
    case DistributionKind::kTwoPoint: {
      const double all_low = std::pow(m.p_lo, rivals);
      x = {m.lo, m.hi};
      w = {all_low, 1.0 - all_low};
      return;
    }
    default: {
      const std::size_t panels =
          std::max<std::size_t>(1, (s.options.resolution + kPanelOrder - 1) / kPanelOrder);
      static const GaussLegendre rule(kPanelOrder);
      std::vector<double> nodes, weights;
      rule.composite(m.lo, m.hi, panels, nodes, weights);
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double F = marginal_cdf(d.kind, m, nodes[i]);
        const double f = marginal_pdf(d.kind, m, nodes[i]);
        x.push_back(nodes[i]);
        w.push_back(weights[i] * rivals * std::pow(F, rivals - 1.0) * f);
      }
    }
  }
}

PayoffEstimate by_quadrature(double budget, const PayoffSetup& s) {
  PayoffEstimate est;
  est.method = PayoffMethod::kQuadrature;
  std::vector<double> x, w;
  rival_max_rule(s, x, w);
  std::vector<double> terms;
  terms.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Sample smp = integrand(budget, x[i], s);
    absorb(est, smp);
    terms.push_back(w[i] * smp.value);
  }
  est.value = exact_sum(terms);
  return est;
}

PayoffEstimate by_monte_carlo(double budget, const PayoffSetup& s) {
  const std::size_t reps = s.options.resolution;
  std::vector<Sample> samples(reps);
  detail::parallel_for(reps, s.options.workers, [&](std::size_t k) {
    Rng rng(derive_seed(s.options.seed, k));
    std::size_t rejections = 0;
    BidderType y{-INFINITY, -INFINITY};
    for (int j = 0; j + 1 < s.params.bidders; ++j) {
      const BidderType t = draw_type(s.dist, rng, rejections);
      y.budget = std::max(y.budget, t.budget);
      y.risk_limit = std::max(y.risk_limit, t.risk_limit);
    }
    samples[k] = integrand(budget, y.risk_limit, s);
  });

  PayoffEstimate est;
  est.method = PayoffMethod::kMonteCarlo;
  std::vector<double> values;
  values.reserve(reps);
  for (const auto& smp : samples) {
    absorb(est, smp);
    values.push_back(smp.value);
  }
  const double n = static_cast<double>(reps);
  est.value = exact_sum(values) / n;
  std::vector<double> sq;
  sq.reserve(reps);
  for (double v : values) sq.push_back((v - est.value) * (v - est.value));
  est.std_error = reps > 1 ? std::sqrt(exact_sum(sq) / (n - 1.0) / n) : 0.0;
  return est;
}

// The market's own minimum bid must satisfy the condition as well.
PayoffEstimate stamp(PayoffEstimate est, const MarketParams& p) {
  est.precondition_violated = est.precondition_violated || !xi(p).condition_holds;
  return est;
}

void check_step(double c_star, const PayoffSetup& s, double step) {
  if (!(step > 0.0)) throw Error(ErrorCode::kInvalidArgument, "step must be positive");
  if (c_star - step < s.c_ell || c_star + step > s.c_bar) {
    throw Error(ErrorCode::kInvalidArgument, "step too large for the budget domain [c_ell, c_bar]");
  }
}

}  // namespace

const char* to_string(PayoffMethod method) {
  return method == PayoffMethod::kQuadrature ? "quadrature" : "monte-carlo";
}

PayoffSetup equilibrium_setup(const MarketParams& params, const TypeDistribution& dist,
                              double c_ell, double c_bar, const AllocationFn& alloc,
                              const PayoffOptions& options) {
  PayoffSetup s;
  s.params = params;
  s.dist = dist;
  s.c_ell = c_ell;
  s.c_bar = c_bar;
  s.strategy = equilibrium_strategy(c_ell, alloc, params);
  s.allocation = alloc;
  s.options = options;
  return s;
}

PayoffEstimate expected_payoff(double own_budget, const PayoffSetup& s) {
  validate_distribution(s.dist);
  if (s.params.bidders < 3) throw Error(ErrorCode::kInvalidArgument, "payoff needs n >= 3");
  if (!s.strategy || !s.allocation) {
    throw Error(ErrorCode::kInvalidArgument, "payoff needs a strategy and an allocation");
  }
  if (s.options.method == PayoffMethod::kQuadrature) {
    if (s.options.resolution < 16) {
      throw Error(ErrorCode::kInvalidArgument, "quadrature needs at least 16 nodes");
    }
    return stamp(by_quadrature(own_budget, s), s.params);
  }
  if (s.options.resolution < 10000) {
    throw Error(ErrorCode::kInvalidArgument, "monte carlo needs at least 10^4 replicates");
  }
  return stamp(by_monte_carlo(own_budget, s), s.params);
}

PayoffEstimate expected_payoff(double own_budget, const BidStrategy& others_strategy,
                               const TypeDistribution& dist, const AllocationCurve& alloc,
                               const MarketParams& params, const PayoffOptions& options) {
  PayoffSetup s;
  s.params = params;
  s.dist = dist;
  s.strategy = others_strategy;
  s.allocation = alloc;
  s.options = options;
  return expected_payoff(own_budget, s);
}

DifferenceCheck foc_residual(double c_star, const PayoffSetup& s, double step) {
  check_step(c_star, s, step);
  const PayoffEstimate lo = expected_payoff(c_star - step, s);
  const PayoffEstimate mid = expected_payoff(c_star, s);
  const PayoffEstimate hi = expected_payoff(c_star + step, s);
  DifferenceCheck r;
  r.value = (hi.value - lo.value) / (2.0 * step);
  r.payoff_at_star = mid.value;
  r.precondition_violated = lo.precondition_violated || mid.precondition_violated ||
                            hi.precondition_violated;
  r.diagnostics = lo.diagnostics + mid.diagnostics + hi.diagnostics;
  return r;
}

DifferenceCheck second_order_flatness(double c_star, const PayoffSetup& s, double step) {
  check_step(c_star, s, step);
  const PayoffEstimate lo = expected_payoff(c_star - step, s);
  const PayoffEstimate mid = expected_payoff(c_star, s);
  const PayoffEstimate hi = expected_payoff(c_star + step, s);
  DifferenceCheck r;
  r.value = (hi.value - 2.0 * mid.value + lo.value) / (step * step);
  r.payoff_at_star = mid.value;
  r.precondition_violated = lo.precondition_violated || mid.precondition_violated ||
                            hi.precondition_violated;
  r.diagnostics = lo.diagnostics + mid.diagnostics + hi.diagnostics;
  return r;
}

double ode_residual(std::span<const double> grid, double c_ell, const AllocationFn& a,
                    const MarketParams& p, DerivativeMode mode, double step) {
  const double x = xi(p).value;
  if (!(x > 0.0)) throw Error(ErrorCode::kDomain, "ode residual needs xi > 0");
  const double ceiling = 1.0 / (x * p.bidders);
  const double alpha_ell = a(c_ell);
  const auto bid = [&](double c) {
    const double w = alpha_ell / a(c);
    return w * p.min_bid + (1.0 - w) * ceiling;
  };
  double worst = 0.0;
  for (double c : grid) {
    if (c < c_ell) throw Error(ErrorCode::kInvalidArgument, "ode grid must lie above c_ell");
    const double alpha = a(c);
    if (!(alpha > 0.0)) throw Error(ErrorCode::kDomain, "allocation must be positive on the grid");
    const double rho = a.relative_rate(c);
    double slope = 0.0;
    if (mode == DerivativeMode::kAnalytic) {
      const double dw = -alpha_ell * a.slope() / (alpha * alpha);
      slope = dw * (p.min_bid - ceiling);
    } else {
      slope = (bid(c + step) - bid(c - step)) / (2.0 * step);
    }
    worst = std::max(worst, std::fabs(slope + rho * bid(c) - rho * ceiling));
  }
  return worst;
}

BestResponse best_response_search(std::span<const double> grid, double c_star,
                                  const PayoffSetup& s) {
  if (grid.empty()) throw Error(ErrorCode::kInvalidArgument, "best response grid is empty");
  BestResponse r;
  const PayoffEstimate at_star = expected_payoff(c_star, s);
  r.payoff_at_star = at_star.value;
  r.precondition_violated = at_star.precondition_violated;
  r.argmax = c_star;
  r.best_payoff = at_star.value;
  for (double c : grid) {
    const PayoffEstimate e = expected_payoff(c, s);
    r.precondition_violated = r.precondition_violated || e.precondition_violated;
    if (e.value > r.best_payoff) {
      r.best_payoff = e.value;
      r.argmax = c;
    }
  }
  r.gap = r.best_payoff - r.payoff_at_star;
  r.relative_gap = r.gap / std::max(std::fabs(r.payoff_at_star), 1e-300);
  return r;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {lo};
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  out.back() = hi;
  return out;
}

}  // namespace bondauction
