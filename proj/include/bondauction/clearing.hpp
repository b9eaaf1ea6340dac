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

#include <span>
#include <vector>

#include "bondauction/market_model.hpp"

namespace bondauction {

struct ClearingInput {
  std::vector<BidPoint> bids;
  MarketParams params;
};

/// Exact (correctly rounded) sum of the submitted quantities. Needs >= 2 bids.
double aggregate_demand(std::span<const BidPoint> bids);

/// Linear price rule: junk - sensitivity * D when D >= 1, 0 (no issuance)
/// otherwise. Throws Error(kDomain) when D >= 1 and junk <= sensitivity * D.
double stop_out_yield(double demand, const MarketParams& params);

/// Uniform-price clearing. Bids are filled in ascending order of requested
/// yield; the group at the yield where supply runs out is prorated by
/// quantity. Every winner receives the same stop-out yield.
AuctionOutcome clear(std::span<const BidPoint> bids, const MarketParams& params);
AuctionOutcome clear(const ClearingInput& input);

}  // namespace bondauction
