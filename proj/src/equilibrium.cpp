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

#include "bondauction/equilibrium.hpp"

#include <cmath>

#include "bondauction/common.hpp"

namespace bondauction {

AllocationFn::AllocationFn(double slope, double intercept) : slope_(slope), intercept_(intercept) {
  if (!std::isfinite(slope) || !std::isfinite(intercept)) {
    throw Error(ErrorCode::kInvalidArgument, "allocation slope and intercept must be finite");
  }
  if (!(slope > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "allocation slope must be positive (constant allocation has no relative rate)");
  }
}

AllocationFn AllocationFn::through(double c_lo, double alpha_lo, double c_hi, double alpha_hi) {
  if (!(c_hi > c_lo)) throw Error(ErrorCode::kInvalidArgument, "allocation points need c_lo < c_hi");
  const double slope = (alpha_hi - alpha_lo) / (c_hi - c_lo);
  return AllocationFn(slope, alpha_lo - slope * c_lo);
}

void AllocationFn::check_domain(double lo, double hi) const {
  const double a = (*this)(lo);
  const double b = (*this)(hi);
  if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0)) {
    throw Error(ErrorCode::kDomain, "allocation must lie in (0, 1) on [" + format_double(lo) +
                                        ", " + format_double(hi) + "]");
  }
}

XiResult xi(const MarketParams& p) {
  const double spread = p.junk_yield - p.expected_resale_yield;
  if (!(spread > 0.0)) throw Error(ErrorCode::kDomain, "xi needs Theta > E[r^s]");
  XiResult r;
  r.value = p.sensitivity / spread;
  r.threshold = 1.0 / (p.min_bid * p.bidders);
  r.condition_holds = r.value < r.threshold;
  return r;
}

double bid_for_weight(double weight, const MarketParams& p) {
  const XiResult x = xi(p);
  if (!(x.value > 0.0)) throw Error(ErrorCode::kDomain, "equilibrium bid needs xi > 0");
  return weight * p.min_bid + (1.0 - weight) / (x.value * p.bidders);
}

double stop_out_for_weight(double weight, const MarketParams& p) {
  const double limit = p.junk_yield - p.sensitivity * p.bidders * p.min_bid;
  return p.expected_resale_yield + (limit - p.expected_resale_yield) * weight;
}

namespace {

double weight_at(double c_star, double c_ell, const AllocationFn& a) {
  if (!(c_star >= c_ell)) {
    throw Error(ErrorCode::kInvalidArgument, "c_star must be >= c_ell");
  }
  const double lo = a(c_ell);
  const double hi = a(c_star);
  if (!(lo > 0.0 && hi > 0.0)) {
    throw Error(ErrorCode::kDomain, "allocation must be positive on [c_ell, c_star]");
  }
  return lo / hi;
}

}  // namespace

EquilibriumPoint equilibrium_bid(double c_star, double c_ell, const AllocationFn& a,
                                 const MarketParams& p) {
  EquilibriumPoint e;
  e.c_star = c_star;
  e.weight = weight_at(c_star, c_ell, a);
  const XiResult x = xi(p);
  e.xi = x.value;
  e.xi_condition_holds = x.condition_holds;
  e.bid = bid_for_weight(e.weight, p);
  e.stop_out = stop_out_for_weight(e.weight, p);
  return e;
}

double symmetric_risk_limit(double lambda, const MarketParams& p) {
  const double r = p.junk_yield - p.sensitivity * p.bidders * lambda;
  if (r < p.risk_free) {
    throw Error(ErrorCode::kDomain, "symmetric risk limit " + format_double(r) +
                                        " below the risk-free rate (mandate/market mismatch)");
  }
  return r;
}

double symmetric_stop_out(double c_star, double c_ell, const AllocationFn& a,
                          const MarketParams& p) {
  xi(p);  // same domain as the equilibrium bid
  return stop_out_for_weight(weight_at(c_star, c_ell, a), p);
}

std::vector<double> proposition_limit_sweep(std::span<const double> c_ell_sequence,
                                            double c_star, const AllocationFn& a,
                                            const MarketParams& p) {
  std::vector<double> bids;
  bids.reserve(c_ell_sequence.size());
  for (std::size_t i = 0; i < c_ell_sequence.size(); ++i) {
    if (i > 0 && !(c_ell_sequence[i] > c_ell_sequence[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "c_ell sequence must be strictly increasing");
    }
    bids.push_back(equilibrium_bid(c_star, c_ell_sequence[i], a, p).bid);
  }
  return bids;
}

BidStrategy equilibrium_strategy(double c_ell, const AllocationFn& a, const MarketParams& p) {
  return [c_ell, a, p](double budget, double min_bid) {
    MarketParams q = p;
    q.min_bid = min_bid;
    return equilibrium_bid(budget, c_ell, a, q).bid;
  };
}

}  // namespace bondauction
