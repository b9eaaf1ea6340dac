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
#include <string>
#include <vector>

#include "bondauction/common.hpp"
#include "bondauction/rng.hpp"

namespace bondauction {

/// The auction environment. All yields are decimal fractions per annum
/// (0.046 means 4.6%).
struct MarketParams {
  double junk_yield = 0.0;             // benchmark high-yield rate; intercept of the price rule
  double sensitivity = 0.0;            // stop-out yield change per unit of aggregate demand
  int bidders = 0;
  double expected_resale_yield = 0.0;  // expectation of the secondary-market yield
  double risk_free = 0.0;              // lower yield bound
  double yield_cap = 0.0;              // upper yield bound
  double min_bid = 0.0;                // symmetric minimum bid, in (0, 1)

  friend bool operator==(const MarketParams&, const MarketParams&) = default;
};

struct Violation {
  std::string invariant;
  double value = 0.0;

  std::string message() const;
};

/// Empty iff every MarketParams invariant holds.
std::vector<Violation> validate_params(const MarketParams& params);

/// A bidder's mandate: budget limit and risk limit (supremum acceptable yield).
struct BidderType {
  double budget = 0.0;
  double risk_limit = 0.0;

  friend bool operator==(const BidderType&, const BidderType&) = default;
};

/// One reported (quantity, yield) point in the direct mechanism.
struct BidPoint {
  double quantity = 0.0;
  double yield = 0.0;
  std::uint64_t bidder_id = 0;
};

struct AuctionOutcome {
  double stop_out = 0.0;
  std::vector<double> allocations;
  bool issued = false;
  double aggregate_demand = 0.0;
  // Requested yield of the group that exhausted the issue; 0 when not issued.
  double marginal_yield = 0.0;
};

enum class DistributionKind {
  kUniform,
  kTruncatedNormal,
  kPointMass,
  kTwoPoint,
};

const char* to_string(DistributionKind kind);
DistributionKind distribution_kind_from_string(const std::string& name);

/// One marginal of the type distribution. The support is [lo, hi] for every
/// kind; a point mass has lo == hi; a two-point marginal puts mass p_lo on lo
/// and 1 - p_lo on hi; a truncated normal additionally uses mean and sd.
struct Marginal {
  double lo = 0.0;
  double hi = 0.0;
  double mean = 0.0;
  double sd = 0.0;
  double p_lo = 0.5;

  friend bool operator==(const Marginal&, const Marginal&) = default;
};

/// Independent marginals for the budget and the risk limit.
struct TypeDistribution {
  DistributionKind kind = DistributionKind::kUniform;
  Marginal budget;
  Marginal risk_limit;

  friend bool operator==(const TypeDistribution&, const TypeDistribution&) = default;
};

void validate_distribution(const TypeDistribution& dist);

// Marginal CDF; for discrete kinds this is the right-continuous step function.
double marginal_cdf(DistributionKind kind, const Marginal& m, double x);
// Marginal density; only meaningful for the continuous kinds.
double marginal_pdf(DistributionKind kind, const Marginal& m, double x);

bool is_discrete(DistributionKind kind);

BidderType draw_type(const TypeDistribution& dist, Rng& rng, std::size_t& rejections);

struct TypeSample {
  std::vector<BidderType> types;
  std::size_t rejections = 0;
  double rejection_rate() const;
};

/// n i.i.d. draws; deterministic for a fixed seed.
TypeSample sample_types(const TypeDistribution& dist, int n, std::uint64_t seed);

/// Minimum bid implied by a risk limit: (junk - r) / (sensitivity * n).
/// Throws Error(kDomain) when the result is outside (0, 1).
double infimum_bid_for_risk_limit(double risk_limit, const MarketParams& params);

/// True iff the bid lies in the participation region for this mandate.
bool is_admissible(const BidPoint& bid, const BidderType& type, const MarketParams& params);

}  // namespace bondauction
