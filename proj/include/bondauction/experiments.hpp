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
#include <span>
#include <string>
#include <vector>

#include "bondauction/equilibrium.hpp"
#include "bondauction/market_model.hpp"

namespace bondauction {

enum class StrategyKind { kEquilibrium, kTruthfulBudget, kFixed };

const char* to_string(StrategyKind kind);
StrategyKind strategy_kind_from_string(const std::string& name);

struct CampaignSpec {
  MarketParams params;
  TypeDistribution dist;
  StrategyKind strategy = StrategyKind::kEquilibrium;
  double c_ell = 0.0;
  double c_bar = 1.0;
  AllocationFn alloc;
  double fixed_bid = 0.0;  // quantity for StrategyKind::kFixed
  std::size_t replicates = 1;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct ReplicateRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  double aggregate_demand = 0.0;
  double stop_out = 0.0;
  bool issued = false;
  std::uint64_t allocation_digest = 0;
  std::size_t flagged_bidders = 0;  // types the strategy is undefined for (they bid 0)
  std::string flag;
};

struct CampaignSummary {
  std::size_t replicates = 0;
  std::size_t issued = 0;
  double issuance_rate = 0.0;
  double mean_stop_out = 0.0;
  double min_stop_out = 0.0;
  double max_stop_out = 0.0;
  double q05 = 0.0, q25 = 0.0, q50 = 0.0, q75 = 0.0, q95 = 0.0;

  friend bool operator==(const CampaignSummary&, const CampaignSummary&) = default;
};

struct CampaignResult {
  std::vector<ReplicateRecord> replicates;
  CampaignSummary summary;
  std::size_t flagged_replicates = 0;
};

/// Each replicate draws n types with a seed derived from (seed, index), maps
/// them to bids and clears. Results do not depend on the worker count.
CampaignResult run_campaign(const CampaignSpec& spec);

/// Summary statistics of the stop-out yield over all replicates (0 for
/// replicates that did not issue). Only stop_out and issued are read.
CampaignSummary summarize(std::span<const ReplicateRecord> records);

/// FNV-1a over the bit patterns of the allocations.
std::uint64_t allocation_digest(std::span<const double> allocations);

enum class SweepAxis { kTheta, kBidders, kLambda, kExpRs, kCEll };

const char* to_string(SweepAxis axis);
SweepAxis sweep_axis_from_string(const std::string& name);

struct SweepSpec {
  SweepAxis axis = SweepAxis::kTheta;
  std::vector<double> values;
  MarketParams baseline;
  double c_ell = 0.0;
  double c_star = 0.0;
  AllocationFn alloc;
  // n axis only: rescale lambda so lambda * n stays at its baseline value.
  bool hold_lambda_n = false;
};

struct SweepRow {
  double axis_value = 0.0;
  double bid = 0.0;
  double stop_out = 0.0;
  double xi = 0.0;
  double lambda = 0.0;
  std::vector<std::string> flags;
};

struct SweepTable {
  SweepAxis axis = SweepAxis::kTheta;
  std::vector<SweepRow> rows;
  bool bids_strictly_decreasing = false;
  // |bid - lambda| strictly decreasing along the rows.
  bool bids_approach_lambda = false;
  bool stop_out_constant = false;
};

/// One row per axis value: equilibrium bid, symmetric stop-out and xi.
/// Rows whose parameters fail validation are kept and flagged.
SweepTable run_sweep(const SweepSpec& spec);

}  // namespace bondauction
