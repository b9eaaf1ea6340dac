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

#include <functional>
#include <span>
#include <vector>

#include "bondauction/market_model.hpp"

namespace bondauction {

/// Linear allocation rule alpha(c) = intercept + slope * c. The slope must be
/// positive; constant allocations leave the relative rate alpha'/alpha
/// undefined and are rejected at construction.
class AllocationFn {
 public:
  AllocationFn() = default;
  AllocationFn(double slope, double intercept);

  /// Line through (c_lo, alpha_lo) and (c_hi, alpha_hi).
  static AllocationFn through(double c_lo, double alpha_lo, double c_hi, double alpha_hi);

  double operator()(double budget) const { return intercept_ + slope_ * budget; }
  double slope() const { return slope_; }
  double intercept() const { return intercept_; }

  /// alpha'(c) / alpha(c)
  double relative_rate(double budget) const { return slope_ / (*this)(budget); }

  /// Throws unless alpha lies in (0, 1) on [lo, hi].
  void check_domain(double lo, double hi) const;

  friend bool operator==(const AllocationFn&, const AllocationFn&) = default;

 private:
  double slope_ = 1.0;
  double intercept_ = 0.0;
};

struct XiResult {
  double value = 0.0;
  double threshold = 0.0;  // 1 / (lambda n)
  bool condition_holds = false;
};

/// Normalized market-power factor theta / (Theta - E[r^s]). A violated
/// xi < 1/(lambda n) condition is reported, not thrown.
XiResult xi(const MarketParams& params);

struct EquilibriumPoint {
  double c_star = 0.0;
  double bid = 0.0;
  double xi = 0.0;
  double stop_out = 0.0;
  double weight = 0.0;  // alpha(c_ell) / alpha(c_star)
  bool xi_condition_holds = false;
};

/// Closed-form symmetric equilibrium bid at budget c_star:
///   b* = w lambda + (1 - w) / (xi n),  w = alpha(c_ell) / alpha(c_star).
EquilibriumPoint equilibrium_bid(double c_star, double c_ell, const AllocationFn& alloc,
                                 const MarketParams& params);

// The same closed forms written directly in terms of the weight w.
double bid_for_weight(double weight, const MarketParams& params);
double stop_out_for_weight(double weight, const MarketParams& params);

/// Theta - theta n lambda. Throws Error(kDomain) when below the risk-free rate.
double symmetric_risk_limit(double lambda, const MarketParams& params);

/// E[r^s] + (r_ell* - E[r^s]) w. Identical to Theta - theta n b* up to rounding.
double symmetric_stop_out(double c_star, double c_ell, const AllocationFn& alloc,
                          const MarketParams& params);

/// Equilibrium bids at a fixed c_star for an increasing sequence of c_ell
/// values bounded by c_star; the bids converge to lambda as c_ell -> c_star.
std::vector<double> proposition_limit_sweep(std::span<const double> c_ell_sequence,
                                            double c_star, const AllocationFn& alloc,
                                            const MarketParams& params);

/// Bid as a function of (reported budget, minimum bid).
using BidStrategy = std::function<double(double budget, double min_bid)>;

/// Closed-form equilibrium strategy with the minimum bid supplied per call.
BidStrategy equilibrium_strategy(double c_ell, const AllocationFn& alloc,
                                 const MarketParams& params);

}  // namespace bondauction
