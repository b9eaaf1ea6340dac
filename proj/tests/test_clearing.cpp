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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "bondauction/clearing.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bondauction;

namespace {

std::vector<BidPoint> bids_of(std::initializer_list<std::pair<double, double>> qy) {
  std::vector<BidPoint> out;
  std::uint64_t id = 0;
  for (const auto& [q, y] : qy) out.push_back({q, y, id++});
  return out;
}

// Independent greedy fill in long double, used as the oracle.
std::vector<double> greedy_fill(const std::vector<BidPoint>& bids) {
  long double total = 0.0L;
  for (const auto& b : bids) total += b.quantity;
  std::vector<double> out(bids.size(), 0.0);
  if (total < 1.0L - 1e-15L) return out;
  std::map<double, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < bids.size(); ++i) groups[bids[i].yield].push_back(i);
  long double remaining = 1.0L;
  for (const auto& [y, idx] : groups) {
    long double g = 0.0L;
    for (auto i : idx) g += bids[i].quantity;
    if (g <= remaining) {
      for (auto i : idx) out[i] = bids[i].quantity;
      remaining -= g;
    } else {
      for (auto i : idx) out[i] = static_cast<double>(remaining * bids[i].quantity / g);
      remaining = 0.0L;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("aggregate demand") {
  CHECK(aggregate_demand(std::vector<BidPoint>(10, {0.1, 0.046, 0})) == 1.0);
  CHECK(aggregate_demand(std::vector<BidPoint>(4, {0.0, 0.046, 0})) == 0.0);
  CHECK(aggregate_demand(bids_of({{0.35, 0.03}, {0.25, 0.03}, {0.45, 0.03}, {0.45, 0.03},
                                  {0.3, 0.03}})) == 1.8);
  CHECK_THROWS_AS(aggregate_demand(bids_of({{0.5, 0.03}})), Error);
  CHECK_THROWS_AS(aggregate_demand(bids_of({{0.5, 0.03}, {-0.1, 0.03}})), Error);
}

TEST_CASE("stop-out yield rule") {
  CHECK(std::fabs(stop_out_yield(1.0, testdata::rescaled()) - 0.046) < 1e-15);
  CHECK(stop_out_yield(0.9, testdata::rescaled()) == 0.0);
  MarketParams p{0.10, 0.02, 10, 0.04, 0.0, 0.06, 0.1};
  CHECK(std::fabs(stop_out_yield(1.5, p) - 0.07) < 1e-15);
  try {
    stop_out_yield(3.0, testdata::rescaled());
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDomain);
  }
}

TEST_CASE("ten symmetric bids clear at the risk limit") {
  const auto o = clear(std::vector<BidPoint>(10, {0.1, 0.046, 0}), testdata::rescaled());
  CHECK(o.issued);
  CHECK(std::fabs(o.stop_out - 0.046) < 1e-12);
  for (double a : o.allocations) CHECK(a == 0.1);
}

TEST_CASE("rationing at the third yield level") {
  MarketParams p{0.10, 0.01, 5, 0.02, 0.0, 0.04, 0.1};
  const auto bids = bids_of({{0.35, 0.03012}, {0.25, 0.03013}, {0.45, 0.03014}, {0.45, 0.03015},
                             {0.3, 0.03017}});
  const auto o = clear(bids, p);
  REQUIRE(o.issued);
  const std::vector<double> expected{0.35, 0.25, 0.40, 0.0, 0.0};
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::fabs(o.allocations[i] - expected[i]) < 1e-15);
  CHECK(o.marginal_yield == 0.03014);
  CHECK(std::fabs(o.stop_out - (0.10 - 0.01 * 1.8)) < 1e-15);
}

TEST_CASE("equal pro-rata among tied marginal bidders") {
  MarketParams p{0.10, 0.01, 3, 0.02, 0.0, 0.04, 0.1};
  const auto o = clear(bids_of({{0.7, 0.02}, {0.3, 0.03}, {0.3, 0.03}}), p);
  CHECK(o.allocations[0] == 0.7);
  CHECK(std::fabs(o.allocations[1] - 0.15) < 1e-15);
  CHECK(std::fabs(o.allocations[2] - 0.15) < 1e-15);
}

TEST_CASE("undersubscribed issue is not issued") {
  const auto o = clear(std::vector<BidPoint>(10, {0.05, 0.046, 0}), testdata::rescaled());
  CHECK_FALSE(o.issued);
  CHECK(o.stop_out == 0.0);
  CHECK(o.aggregate_demand == 0.5);
  for (double a : o.allocations) CHECK(a == 0.0);
}

TEST_CASE("clearing rejects bad input") {
  CHECK_THROWS_AS(clear(bids_of({{1.0, 0.03}}), testdata::rescaled()), Error);
  CHECK_THROWS_AS(clear(bids_of({{0.5, 0.03}, {-0.5, 0.03}}), testdata::rescaled()), Error);
  CHECK_THROWS_AS(clear(bids_of({{0.5, 0.03}, {NAN, 0.03}}), testdata::rescaled()), Error);
  ClearingInput in{std::vector<BidPoint>(10, {0.1, 0.046, 0}), testdata::rescaled()};
  CHECK(clear(in).issued);
}

TEST_CASE("randomized clearing matches the greedy oracle and the invariants") {
  std::mt19937_64 gen(20261016);
  std::uniform_int_distribution<int> count(2, 12);
  std::uniform_real_distribution<double> qty(0.0, 0.45);
  std::uniform_int_distribution<int> level(0, 5);
  const MarketParams p{0.10, 0.01, 12, 0.02, 0.0, 0.05, 0.1};
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<BidPoint> bids(static_cast<std::size_t>(count(gen)));
    for (std::size_t i = 0; i < bids.size(); ++i) {
      bids[i] = {qty(gen), 0.02 + 0.005 * level(gen), i};
    }
    const auto o = clear(bids, p);
    const auto oracle = greedy_fill(bids);
    CHECK(o.issued == (o.aggregate_demand >= 1.0));
    for (std::size_t i = 0; i < bids.size(); ++i) {
      CHECK(std::fabs(o.allocations[i] - oracle[i]) < 1e-12);
      CHECK(o.allocations[i] <= bids[i].quantity);
    }
    if (o.issued) {
      CHECK(std::fabs(exact_sum(o.allocations) - 1.0) < 1e-12);
      CHECK(o.stop_out == stop_out_yield(o.aggregate_demand, p));
    } else {
      CHECK(o.stop_out == 0.0);
    }
  }
}
