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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bondauction/common.hpp"
#include "bondauction/equilibrium.hpp"
#include "bondauction/experiments.hpp"
#include "bondauction/market_model.hpp"
#include "bondauction/verification.hpp"

namespace bondauction {

/// Which of lambda / r_ell the scenario file supplied.
enum class MinBidSource { kLambda, kRiskLimit, kBoth };

struct MandateConfig {
  double c_ell = 0.0;
  double c_bar = 0.0;
  double c_star = 0.0;
  bool c_star_given = false;
  double lambda = 0.0;
  double r_ell = 0.0;
  MinBidSource source = MinBidSource::kLambda;

  friend bool operator==(const MandateConfig&, const MandateConfig&) = default;
};

enum class AllocationForm { kSlopeIntercept, kPoints };

struct AllocationConfig {
  AllocationForm form = AllocationForm::kSlopeIntercept;
  double slope = 1.0;
  double intercept = 0.0;
  // kPoints: alpha(c_ell) and alpha(c_star)
  double alpha_ell = 0.0;
  double alpha_star = 0.0;

  friend bool operator==(const AllocationConfig&, const AllocationConfig&) = default;
};

struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t replicates = 1000;
  StrategyKind strategy = StrategyKind::kEquilibrium;
  double fixed_bid = 0.0;
  unsigned workers = 1;
  PayoffMethod payoff_method = PayoffMethod::kQuadrature;
  std::size_t payoff_resolution = 64;
  std::size_t grid = 101;
  std::size_t ode_grid = 1000;
  double foc_step = 1e-4;
  double second_order_step = 1e-3;
  double ode_fd_step = 1e-5;
  double foc_tol = kFocTolerance;
  double gap_tol = kGapTolerance;
  double second_order_tol = kSecondOrderTolerance;
  double ode_tol = kOdeAnalyticTolerance;
  double ode_fd_tol = kOdeFiniteDifferenceTolerance;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct OutputConfig {
  std::string directory = ".";
  bool csv = true;
  bool jsonl = false;

  friend bool operator==(const OutputConfig&, const OutputConfig&) = default;
};

struct SweepConfig {
  bool present = false;
  SweepAxis axis = SweepAxis::kTheta;
  std::vector<double> values;
  bool hold_lambda_n = false;

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

/// A full experiment description. market.min_bid always holds the resolved
/// lambda; mandate.r_ell the matching symmetric risk limit.
struct ScenarioConfig {
  MarketParams market;
  MandateConfig mandate;
  AllocationConfig allocation;
  TypeDistribution distribution;
  RunConfig run;
  OutputConfig output;
  SweepConfig sweep;
  std::vector<std::string> warnings;

  AllocationFn allocation_fn() const;
  PayoffSetup payoff_setup() const;
  CampaignSpec campaign_spec() const;
  SweepSpec sweep_spec() const;

  bool xi_condition_holds() const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Every problem found while parsing, each prefixed with its line number
/// (when known) and key path.
class ScenarioError : public Error {
 public:
  explicit ScenarioError(std::vector<std::string> issues);
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  std::vector<std::string> issues_;
};

/// Parses the line-oriented scenario format: `[section]` headers,
/// `key = value` lines and `#` comments. Unknown keys are fatal. `overrides`
/// maps "section.key" to a value that replaces (or adds) that entry.
ScenarioConfig parse_scenario(const std::string& text,
                              const std::map<std::string, std::string>& overrides = {});

ScenarioConfig load_scenario(const std::string& path,
                             const std::map<std::string, std::string>& overrides = {});

/// Canonical text form; parse_scenario(serialize_scenario(c)) == c.
std::string serialize_scenario(const ScenarioConfig& config);

}  // namespace bondauction
