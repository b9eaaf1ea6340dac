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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "bondauction/equilibrium.hpp"
#include "bondauction/market_model.hpp"

namespace bondauction {

// Tolerances that separate formula error from discretization error.
inline constexpr double kFocTolerance = 1e-6;
inline constexpr double kGapTolerance = 1e-5;  // relative
inline constexpr double kOdeAnalyticTolerance = 1e-12;
inline constexpr double kOdeFiniteDifferenceTolerance = 1e-6;
inline constexpr double kSecondOrderTolerance = 1e-4;

enum class PayoffMethod { kQuadrature, kMonteCarlo };

const char* to_string(PayoffMethod method);

struct PayoffOptions {
  PayoffMethod method = PayoffMethod::kQuadrature;
  // Quadrature nodes (>= 16) or Monte Carlo replicates (>= 10^4).
  std::size_t resolution = 64;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct PayoffEstimate {
  double value = 0.0;
  double std_error = 0.0;  // 0 for quadrature
  PayoffMethod method = PayoffMethod::kQuadrature;
  // Integrand evaluations whose clearing failed; they contribute 0.
  std::size_t diagnostics = 0;
  std::string first_diagnostic;
  // Some rival profile had xi >= 1 / (lambda n).
  bool precondition_violated = false;
};

using AllocationCurve = std::function<double(double budget)>;

/// Everything the payoff integrand needs.
///
/// The reported budget c is mirrored across the symmetric profile, so the
/// engine clears n bids of strategy(c, lambda_y). Rival types enter through
/// y, the component-wise maximum of the n - 1 rival types (CDF F^(n-1) per
/// marginal); its risk-limit component fixes the profile's minimum bid
/// lambda_y = infimum_bid_for_risk_limit(y_r). The budget component of y does
/// not enter the integrand. The integrand is alpha(c) (r_hat - E[r^s]) when
/// the issue clears and 0 otherwise.
struct PayoffSetup {
  MarketParams params;
  TypeDistribution dist;
  double c_ell = 0.0;
  double c_bar = 1.0;
  BidStrategy strategy;
  AllocationCurve allocation;
  PayoffOptions options;
};

/// Setup where every bidder plays the closed-form equilibrium strategy and
/// the integrand uses the same allocation rule.
PayoffSetup equilibrium_setup(const MarketParams& params, const TypeDistribution& dist,
                              double c_ell, double c_bar, const AllocationFn& alloc,
                              const PayoffOptions& options = {});

PayoffEstimate expected_payoff(double own_budget, const PayoffSetup& setup);

PayoffEstimate expected_payoff(double own_budget, const BidStrategy& others_strategy,
                               const TypeDistribution& dist, const AllocationCurve& alloc,
                               const MarketParams& params, const PayoffOptions& options);

struct DifferenceCheck {
  double value = 0.0;  // the finite difference
  double payoff_at_star = 0.0;
  bool precondition_violated = false;
  std::size_t diagnostics = 0;
};

/// Central first difference of the expected payoff at c_star.
DifferenceCheck foc_residual(double c_star, const PayoffSetup& setup, double step);

/// Central second difference of the expected payoff at c_star.
DifferenceCheck second_order_flatness(double c_star, const PayoffSetup& setup, double step);

enum class DerivativeMode { kAnalytic, kFiniteDifference };

/// max over the grid of |b' + rho b - rho / (xi n)| for the closed-form bid,
/// rho = alpha' / alpha. The finite-difference mode uses a central difference
/// with the given step for b'.
double ode_residual(std::span<const double> c_grid, double c_ell, const AllocationFn& alloc,
                    const MarketParams& params, DerivativeMode mode = DerivativeMode::kAnalytic,
                    double step = 1e-5);

struct BestResponse {
  double argmax = 0.0;
  double best_payoff = 0.0;
  double payoff_at_star = 0.0;
  double gap = 0.0;           // best_payoff - payoff_at_star, >= 0
  double relative_gap = 0.0;  // gap / max(|payoff_at_star|, tiny)
  bool precondition_violated = false;
};

/// Grid search over unilateral budget reports.
BestResponse best_response_search(std::span<const double> own_grid, double c_star,
                                  const PayoffSetup& setup);

/// n evenly spaced points on [lo, hi] (n >= 2) or {lo} when n == 1.
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace bondauction
