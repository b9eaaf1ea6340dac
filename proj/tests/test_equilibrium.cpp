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

#include <cmath>
#include <vector>

#include "bondauction/equilibrium.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bondauction;

TEST_CASE("xi and its condition") {
  const auto raw = xi(testdata::raw());
  CHECK(raw.value == doctest::Approx(8.5).epsilon(1e-14));
  CHECK(raw.threshold == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(raw.condition_holds);
  const auto scaled = xi(testdata::rescaled());
  CHECK(scaled.value == doctest::Approx(0.85).epsilon(1e-14));
  CHECK(scaled.condition_holds);
  auto p = testdata::rescaled();
  p.sensitivity = 0.0;
  CHECK(xi(p).value == 0.0);
  p.junk_yield = 0.04;
  CHECK_THROWS_AS(xi(p), Error);
}

TEST_CASE("published example bid") {
  const auto e = equilibrium_bid(0.169, 0.1, testdata::example_alloc(), testdata::raw());
  CHECK(std::fabs(e.bid - 0.0713831) < 1e-6);
  CHECK(std::fabs(e.bid - 0.0711) < 5e-4);
  CHECK(std::fabs(e.weight - 0.1 / 0.148) < 1e-14);
  CHECK_FALSE(e.xi_condition_holds);
  CHECK(std::fabs(1.0 - 10 * e.bid - 0.2862) < 1e-3);
}

TEST_CASE("bid at the minimum budget is lambda") {
  const auto e = equilibrium_bid(0.1, 0.1, testdata::example_alloc(), testdata::rescaled());
  CHECK(e.weight == 1.0);
  CHECK(e.bid == 0.1);
}

TEST_CASE("bid for a half weight") {
  const double b = bid_for_weight(0.5, testdata::rescaled());
  CHECK(std::fabs(b - (0.05 + 0.5 / 8.5)) < 1e-15);
  CHECK(std::fabs(b - 0.10882) < 1e-5);
}

TEST_CASE("equilibrium bid rejects budgets below the minimum") {
  CHECK_THROWS_AS(equilibrium_bid(0.05, 0.1, testdata::example_alloc(), testdata::rescaled()),
                  Error);
  CHECK_THROWS_AS(AllocationFn(0.0, 0.1), Error);
  CHECK_THROWS_AS(AllocationFn(-1.0, 0.5), Error);
}

TEST_CASE("symmetric risk limit") {
  CHECK(std::fabs(symmetric_risk_limit(0.1, testdata::rescaled()) - 0.046) < 1e-15);
  MarketParams p{0.10, 0.05, 10, 0.04, 0.0, 0.06, 0.1};
  CHECK(std::fabs(symmetric_risk_limit(0.1, p) - 0.05) < 1e-15);
  CHECK(symmetric_risk_limit(0.0, testdata::rescaled()) == 0.08);
  CHECK_THROWS_AS(symmetric_risk_limit(0.1, testdata::raw()), Error);
}

TEST_CASE("symmetric stop-out") {
  const auto p = testdata::rescaled();
  const auto a = testdata::example_alloc();
  CHECK(std::fabs(symmetric_stop_out(0.1, 0.1, a, p) - 0.046) < 1e-15);
  CHECK(std::fabs(stop_out_for_weight(0.675676, p) - 0.0440541) < 1e-7);
  // zero spread: risk limit equal to the resale yield
  auto q = p;
  q.min_bid = (q.junk_yield - q.expected_resale_yield) / (q.sensitivity * q.bidders);
  CHECK(std::fabs(stop_out_for_weight(0.3, q) - q.expected_resale_yield) < 1e-15);
  const double b = equilibrium_bid(0.169, 0.1, a, p).bid;
  CHECK(std::fabs(symmetric_stop_out(0.169, 0.1, a, p) - (0.08 - 0.034 * 10 * b)) < 1e-15);
}

TEST_CASE("bids fall toward lambda as the minimum budget rises") {
  const auto p = testdata::rescaled();
  const AllocationFn a(1.0, 0.0);
  const std::vector<double> c_ell{0.1, 0.15, 0.2, 0.2};
  CHECK_THROWS_AS(proposition_limit_sweep(c_ell, 0.2, a, p), Error);
  const std::vector<double> rising{0.1, 0.18, 0.198, 0.2};  // weights 0.5, 0.9, 0.99, 1
  const auto bids = proposition_limit_sweep(rising, 0.2, a, p);
  REQUIRE(bids.size() == 4);
  for (std::size_t i = 1; i < bids.size(); ++i) CHECK(bids[i] < bids[i - 1]);
  CHECK(bids.back() == 0.1);

  auto flat = p;
  flat.min_bid = 1.0 / (0.85 * 10);
  const auto same = proposition_limit_sweep(rising, 0.2, a, flat);
  for (double b : same) CHECK(std::fabs(b - flat.min_bid) < 1e-15);
}

TEST_CASE("equilibrium strategy uses the supplied minimum bid") {
  const auto p = testdata::small_market();
  const auto s = equilibrium_strategy(0.65, AllocationFn(1.0, 0.0), p);
  auto q = p;
  q.min_bid = 0.625;
  CHECK(s(0.8, 0.625) == equilibrium_bid(0.8, 0.65, AllocationFn(1.0, 0.0), q).bid);
  CHECK(s(0.65, 0.5) == 0.5);
}
