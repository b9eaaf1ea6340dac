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
#include <string>
#include <vector>

#include "bondauction/clearing.hpp"
#include "bondauction/scenario.hpp"

namespace bondauction {

enum class VerifyKind { kFoc, kOde, kBestResponse, kSecondOrder };

const char* to_string(VerifyKind kind);
VerifyKind verify_kind_from_string(const std::string& name);

struct VerifyReport {
  VerifyKind kind = VerifyKind::kFoc;
  double value = 0.0;      // |residual|, relative gap or max ODE residual
  double tolerance = 0.0;
  // ODE only: the finite-difference residual and its tolerance.
  double fd_value = 0.0;
  double fd_tolerance = 0.0;
  double c_star = 0.0;
  double payoff_at_star = 0.0;
  // Best response only.
  double argmax = 0.0;
  double best_payoff = 0.0;
  std::size_t grid_points = 0;
  std::size_t diagnostics = 0;
  bool precondition_violated = false;
  bool passed = false;
};

/// Runs one verification check with the grids, steps and tolerances of the
/// scenario's [run] section.
VerifyReport run_verification(const ScenarioConfig& config, VerifyKind kind);

struct ProfileClearing {
  std::vector<BidderType> types;
  std::vector<BidPoint> bids;
  AuctionOutcome outcome;
};

/// Draws one type profile with the scenario's seed, maps it to bids with the
/// scenario's strategy and clears it (the first replicate of the campaign).
ProfileClearing clear_profile(const ScenarioConfig& config);

/// The shipped paper_example.scenario text.
const std::string& paper_example_scenario_text();

struct PaperExampleReport {
  double xi = 0.0;
  double xi_threshold = 0.0;
  bool xi_violated = false;
  double bid = 0.0;
  double residual_supply = 0.0;
  double stop_out = 0.0;
  double aggregate_sensitivity = 0.0;
  bool issued = false;
  std::vector<double> symmetric_allocations;
  std::string text;
};

/// Reconciles the published numbers of the worked example with the model:
/// the bid and xi under the raw sensitivity, the stop-out under the
/// sensitivity divided by n.
PaperExampleReport paper_example_report(const ScenarioConfig& config);

}  // namespace bondauction
