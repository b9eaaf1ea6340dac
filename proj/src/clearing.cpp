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

#include "bondauction/clearing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bondauction/common.hpp"

namespace bondauction {
namespace {

void check_bids(std::span<const BidPoint> bids) {
  if (bids.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "clearing needs at least 2 bids");
  }
  for (const auto& b : bids) {
    if (std::isnan(b.quantity) || b.quantity < 0.0 || std::isinf(b.quantity)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bid quantity must be finite and non-negative (bidder " +
                      std::to_string(b.bidder_id) + ")");
    }
    if (!std::isfinite(b.yield)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bid yield must be finite (bidder " + std::to_string(b.bidder_id) + ")");
    }
  }
}

}  // namespace

double aggregate_demand(std::span<const BidPoint> bids) {
  check_bids(bids);
  std::vector<double> q;
  q.reserve(bids.size());
  for (const auto& b : bids) q.push_back(b.quantity);
  return exact_sum(q);
}

double stop_out_yield(double demand, const MarketParams& p) {
  if (!(demand >= 1.0)) return 0.0;
  const double y = p.junk_yield - p.sensitivity * demand;
  if (!(p.junk_yield > p.sensitivity * demand)) {
    throw Error(ErrorCode::kDomain, "price rule needs Theta > theta * D (D = " +
                                        format_double(demand) + ")");
  }
  return y;
}

AuctionOutcome clear(std::span<const BidPoint> bids, const MarketParams& p) {
  AuctionOutcome out;
  out.aggregate_demand = aggregate_demand(bids);
  out.allocations.assign(bids.size(), 0.0);
  if (out.aggregate_demand < 1.0) return out;

  out.stop_out = stop_out_yield(out.aggregate_demand, p);
  out.issued = true;

  std::vector<std::size_t> order(bids.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return bids[a].yield < bids[b].yield; });

  std::vector<double> filled;  // quantities fully allocated so far
  std::size_t begin = 0;
  while (begin < order.size()) {
    std::size_t end = begin;
    const double level = bids[order[begin]].yield;
    while (end < order.size() && bids[order[end]].yield == level) ++end;

    std::vector<double> group;
    for (std::size_t k = begin; k < end; ++k) group.push_back(bids[order[k]].quantity);
    std::vector<double> through = filled;
    through.insert(through.end(), group.begin(), group.end());
    const double total = exact_sum(through);

    if (total <= 1.0) {
      for (std::size_t k = begin; k < end; ++k) out.allocations[order[k]] = bids[order[k]].quantity;
      filled = std::move(through);
      if (total == 1.0) {
        out.marginal_yield = level;
        break;
      }
    } else {
      std::vector<double> residual{1.0};
      for (double q : filled) residual.push_back(-q);
      const double remaining = exact_sum(residual);
      const double group_demand = exact_sum(group);
      for (std::size_t k = begin; k < end; ++k) {
        out.allocations[order[k]] = bids[order[k]].quantity * remaining / group_demand;
      }
      out.marginal_yield = level;
      break;
    }
    begin = end;
  }
  return out;
}

AuctionOutcome clear(const ClearingInput& input) { return clear(input.bids, input.params); }

}  // namespace bondauction
