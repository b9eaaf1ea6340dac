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
#include <string>

#include "bondauction/market_model.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bondauction;

namespace {

bool has(const std::vector<Violation>& v, const std::string& inv) {
  for (const auto& x : v) {
    if (x.invariant == inv) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validate_params accepts the rescaled example") {
  CHECK(validate_params(testdata::rescaled()).empty());
}

TEST_CASE("validate_params reports each broken invariant") {
  auto p = testdata::rescaled();
  p.bidders = 2;
  auto v = validate_params(p);
  REQUIRE(v.size() == 1);
  CHECK(v[0].invariant == "n >= 3");
  CHECK(v[0].message().find("n >= 3") != std::string::npos);

  p = testdata::rescaled();
  p.junk_yield = 0.03;
  CHECK(has(validate_params(p), "Theta > exp_rs"));

  p = testdata::rescaled();
  p.min_bid = 1.0;
  CHECK(has(validate_params(p), "0 < lambda_min < 1"));
  p.min_bid = 0.0;
  CHECK(has(validate_params(p), "0 < lambda_min < 1"));

  p = testdata::rescaled();
  p.sensitivity = 0.0;
  CHECK(has(validate_params(p), "theta > 0"));

  p = testdata::rescaled();
  p.risk_free = 0.05;
  CHECK(has(validate_params(p), "r_f <= exp_rs"));

  p = testdata::rescaled();
  p.yield_cap = 0.09;
  CHECK(has(validate_params(p), "r_bar < Theta"));

  p = testdata::rescaled();
  p.expected_resale_yield = NAN;
  CHECK(has(validate_params(p), "all yields finite"));
}

TEST_CASE("point-mass sampling gives identical types") {
  const auto s = sample_types(testdata::point_mass(0.169, 0.046), 10, 1);
  REQUIRE(s.types.size() == 10);
  for (const auto& t : s.types) CHECK(t == BidderType{0.169, 0.046});
  CHECK(s.rejections == 0);
}

TEST_CASE("uniform sampling stays inside the box and is deterministic") {
  TypeDistribution d;
  d.kind = DistributionKind::kUniform;
  d.budget = {0.1, 0.2};
  d.risk_limit = {0.04, 0.05};
  const auto a = sample_types(d, 10, 42);
  const auto b = sample_types(d, 10, 42);
  REQUIRE(a.types.size() == 10);
  for (std::size_t i = 0; i < a.types.size(); ++i) {
    CHECK(a.types[i] == b.types[i]);
    CHECK(a.types[i].budget >= 0.1);
    CHECK(a.types[i].budget <= 0.2);
    CHECK(a.types[i].risk_limit >= 0.04);
    CHECK(a.types[i].risk_limit <= 0.05);
  }
  CHECK(sample_types(d, 10, 43).types[0].budget != a.types[0].budget);
}

TEST_CASE("truncated normal samples respect the support and the truncated mean") {
  TypeDistribution d;
  d.kind = DistributionKind::kTruncatedNormal;
  d.budget = {0.1, 0.2, 0.12, 0.05};
  d.risk_limit = {0.04, 0.05, 0.045, 0.01};
  const auto s = sample_types(d, 20000, 5);
  double sum = 0.0;
  for (const auto& t : s.types) {
    CHECK(t.budget >= 0.1);
    CHECK(t.budget <= 0.2);
    sum += t.budget;
  }
  // Mean of N(0.12, 0.05^2) truncated to [0.1, 0.2].
  const double a = (0.1 - 0.12) / 0.05, b = (0.2 - 0.12) / 0.05;
  const auto phi = [](double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI); };
  const auto Phi = [](double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); };
  const double mean = 0.12 + 0.05 * (phi(a) - phi(b)) / (Phi(b) - Phi(a));
  CHECK(std::fabs(sum / 20000.0 - mean) < 4.0 * 0.03 / std::sqrt(20000.0));
  CHECK(marginal_cdf(d.kind, d.budget, 0.1) == 0.0);
  CHECK(marginal_cdf(d.kind, d.budget, 0.2) == doctest::Approx(1.0));
}

TEST_CASE("two-point sampling frequencies follow p_lo") {
  auto d = testdata::two_point();
  d.budget.p_lo = 0.25;
  const auto s = sample_types(d, 40000, 9);
  int lo = 0;
  for (const auto& t : s.types) {
    CHECK((t.budget == 0.7 || t.budget == 0.9));
    lo += t.budget == 0.7;
  }
  CHECK(std::fabs(lo / 40000.0 - 0.25) < 4.0 * std::sqrt(0.25 * 0.75 / 40000.0));
  CHECK(marginal_cdf(d.kind, d.budget, 0.69) == 0.0);
  CHECK(marginal_cdf(d.kind, d.budget, 0.7) == 0.25);
  CHECK(marginal_cdf(d.kind, d.budget, 0.9) == 1.0);
}

TEST_CASE("invalid distributions are rejected") {
  TypeDistribution d;
  d.kind = DistributionKind::kUniform;
  d.budget = {0.2, 0.1};
  d.risk_limit = {0.04, 0.05};
  CHECK_THROWS_AS(validate_distribution(d), Error);
  d.budget = {0.1, 1.5};
  CHECK_THROWS_AS(validate_distribution(d), Error);
  CHECK_THROWS_AS(sample_types(testdata::point_mass(0.1, 0.04), 2, 0), Error);
  CHECK_THROWS_AS(distribution_kind_from_string("cauchy"), Error);
  CHECK(distribution_kind_from_string("independent-uniform") == DistributionKind::kUniform);
}

TEST_CASE("infimum bid for a risk limit") {
  CHECK(infimum_bid_for_risk_limit(0.046, testdata::rescaled()) == doctest::Approx(0.1).epsilon(1e-14));
  MarketParams p{0.10, 0.05, 10, 0.04, 0.0, 0.06, 0.1};
  CHECK(infimum_bid_for_risk_limit(0.05, p) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK_THROWS_AS(infimum_bid_for_risk_limit(0.08, testdata::rescaled()), Error);
  try {
    infimum_bid_for_risk_limit(0.08, testdata::rescaled());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDomain);
  }
}

TEST_CASE("admissibility of bids") {
  const auto p = testdata::rescaled();
  const BidderType t{0.169, 0.046};
  CHECK(is_admissible({0.1, 0.046, 0}, t, p));
  CHECK_FALSE(is_admissible({0.1, 0.047, 0}, t, p));
  CHECK_FALSE(is_admissible({0.2, 0.046, 0}, t, p));
}
