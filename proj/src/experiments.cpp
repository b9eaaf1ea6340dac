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

#include "bondauction/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "bondauction/clearing.hpp"
#include "bondauction/common.hpp"
#include "bondauction/rng.hpp"
#include "parallel.hpp"

namespace bondauction {
namespace {

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double h = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

ReplicateRecord run_replicate(const CampaignSpec& spec, std::size_t index) {
  ReplicateRecord rec;
  rec.index = index;
  rec.seed = derive_seed(spec.seed, index);
  Rng rng(rec.seed);
  std::size_t rejections = 0;
  const MarketParams& p = spec.params;

  std::vector<BidPoint> bids;
  bids.reserve(static_cast<std::size_t>(p.bidders));
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
      case StrategyKind::kEquilibrium:
        try {
          if (t.budget < spec.c_ell || t.budget > spec.c_bar) {
            throw Error(ErrorCode::kDomain, "budget outside [c_ell, c_bar]");
          }
          MarketParams q = p;
          q.min_bid = infimum_bid_for_risk_limit(t.risk_limit, p);
          bid.quantity = equilibrium_bid(t.budget, spec.c_ell, spec.alloc, q).bid;
        } catch (const Error& e) {
          ++rec.flagged_bidders;
          if (rec.flag.empty()) rec.flag = std::string("strategy undefined: ") + e.what();
        }
        break;
    }
    bids.push_back(bid);
  }

  try {
    const AuctionOutcome o = clear(bids, p);
    rec.aggregate_demand = o.aggregate_demand;
    rec.stop_out = o.stop_out;
    rec.issued = o.issued;
    rec.allocation_digest = allocation_digest(o.allocations);
  } catch (const Error& e) {
    rec.aggregate_demand = aggregate_demand(bids);
    if (rec.flag.empty()) rec.flag = std::string("clearing failed: ") + e.what();
    ++rec.flagged_bidders;
  }
  return rec;
}

}  // namespace

const char* to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kEquilibrium: return "equilibrium";
    case StrategyKind::kTruthfulBudget: return "truthful-budget";
    case StrategyKind::kFixed: return "fixed";
  }
  return "?";
}

StrategyKind strategy_kind_from_string(const std::string& name) {
  if (name == "equilibrium") return StrategyKind::kEquilibrium;
  if (name == "truthful-budget") return StrategyKind::kTruthfulBudget;
  if (name == "fixed") return StrategyKind::kFixed;
  throw Error(ErrorCode::kInvalidArgument, "unknown strategy '" + name + "'");
}

std::uint64_t allocation_digest(std::span<const double> allocations) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double a : allocations) {
    auto bits = std::bit_cast<std::uint64_t>(a);
    for (int i = 0; i < 8; ++i) {
      h ^= bits & 0xffU;
      h *= 0x100000001b3ULL;
      bits >>= 8;
    }
  }
  return h;
}

CampaignSummary summarize(std::span<const ReplicateRecord> records) {
  CampaignSummary s;
  s.replicates = records.size();
  if (records.empty()) return s;
  std::vector<double> yields;
  yields.reserve(records.size());
  for (const auto& r : records) {
    yields.push_back(r.stop_out);
    if (r.issued) ++s.issued;
  }
  const double count = static_cast<double>(records.size());
  s.issuance_rate = static_cast<double>(s.issued) / count;
  s.mean_stop_out = exact_sum(yields) / count;
  std::sort(yields.begin(), yields.end());
  s.min_stop_out = yields.front();
  s.max_stop_out = yields.back();
  s.q05 = quantile(yields, 0.05);
  s.q25 = quantile(yields, 0.25);
  s.q50 = quantile(yields, 0.50);
  s.q75 = quantile(yields, 0.75);
  s.q95 = quantile(yields, 0.95);
  return s;
}

CampaignResult run_campaign(const CampaignSpec& spec) {
  if (spec.replicates < 1) throw Error(ErrorCode::kInvalidArgument, "campaign needs replicates >= 1");
  if (spec.params.bidders < 3) throw Error(ErrorCode::kInvalidArgument, "campaign needs n >= 3");
  validate_distribution(spec.dist);
  if (spec.strategy == StrategyKind::kFixed && !(spec.fixed_bid >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "fixed bid must be non-negative");
  }

  CampaignResult result;
  result.replicates.resize(spec.replicates);
  detail::parallel_for(spec.replicates, spec.workers, [&](std::size_t k) {
    result.replicates[k] = run_replicate(spec, k);
  });
  for (const auto& r : result.replicates) {
    if (!r.flag.empty()) ++result.flagged_replicates;
  }
  result.summary = summarize(result.replicates);
  return result;
}

const char* to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kTheta: return "theta";
    case SweepAxis::kBidders: return "n";
    case SweepAxis::kLambda: return "lambda";
    case SweepAxis::kExpRs: return "exp_rs";
    case SweepAxis::kCEll: return "c_ell";
  }
  return "?";
}

SweepAxis sweep_axis_from_string(const std::string& name) {
  if (name == "theta") return SweepAxis::kTheta;
  if (name == "n") return SweepAxis::kBidders;
  if (name == "lambda") return SweepAxis::kLambda;
  if (name == "exp_rs") return SweepAxis::kExpRs;
  if (name == "c_ell") return SweepAxis::kCEll;
  throw Error(ErrorCode::kInvalidArgument, "unknown sweep axis '" + name + "'");
}

SweepTable run_sweep(const SweepSpec& spec) {
  const auto& v = spec.values;
  const bool up = std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
  const bool down = std::adjacent_find(v.begin(), v.end(), std::less_equal<>()) == v.end();
  if (!up && !down) throw Error(ErrorCode::kInvalidArgument, "sweep values must be strictly monotone");

  SweepTable table;
  table.axis = spec.axis;
  for (double value : v) {
    SweepRow row;
    row.axis_value = value;
    MarketParams p = spec.baseline;
    double c_ell = spec.c_ell;
    switch (spec.axis) {
      case SweepAxis::kTheta: p.sensitivity = value; break;
      case SweepAxis::kLambda: p.min_bid = value; break;
      case SweepAxis::kExpRs: p.expected_resale_yield = value; break;
      case SweepAxis::kCEll: c_ell = value; break;
      case SweepAxis::kBidders:
        if (value != std::floor(value)) {
          throw Error(ErrorCode::kInvalidArgument, "n sweep values must be integers");
        }
        p.bidders = static_cast<int>(value);
        if (spec.hold_lambda_n) {
          p.min_bid = spec.baseline.min_bid * spec.baseline.bidders / p.bidders;
        }
        break;
    }
    row.lambda = p.min_bid;
    for (const auto& violation : validate_params(p)) row.flags.push_back("invalid:" + violation.invariant);
    try {
      const EquilibriumPoint e = equilibrium_bid(spec.c_star, c_ell, spec.alloc, p);
      row.bid = e.bid;
      row.stop_out = e.stop_out;
      row.xi = e.xi;
      if (!e.xi_condition_holds) row.flags.push_back("xi_violated");
      if (!(e.bid >= 0.0 && e.bid < 1.0)) row.flags.push_back("bid_outside_unit_interval");
    } catch (const Error& e) {
      row.bid = row.stop_out = row.xi = std::nan("");
      row.flags.push_back(std::string("error:") + e.what());
    }
    table.rows.push_back(std::move(row));
  }

  const auto& rows = table.rows;
  table.bids_strictly_decreasing = !rows.empty();
  table.bids_approach_lambda = !rows.empty();
  table.stop_out_constant = !rows.empty();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].bid < rows[i - 1].bid)) table.bids_strictly_decreasing = false;
    if (!(std::fabs(rows[i].bid - rows[i].lambda) < std::fabs(rows[i - 1].bid - rows[i - 1].lambda))) {
      table.bids_approach_lambda = false;
    }
    const double scale = std::max(1.0, std::fabs(rows[0].stop_out));
    if (!(std::fabs(rows[i].stop_out - rows[0].stop_out) <= 1e-12 * scale)) {
      table.stop_out_constant = false;
    }
  }
  return table;
}

}  // namespace bondauction
