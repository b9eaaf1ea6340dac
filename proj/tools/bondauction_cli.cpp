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

// Command-line front end. Links only the C interface.

#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bondauction/bondauction.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitPrecondition = 2;

struct Options {
  std::string scenario;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> replicates;
  std::optional<std::size_t> grid;
  std::optional<unsigned> workers;
  std::optional<std::string> out;
  std::optional<double> demand;
  std::vector<std::string> sets;
  bool strict = false;
  std::string verify_kind;
};

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int report_error(const char* what) {
  std::fprintf(stderr, "error: %s: %s\n", what, ba_last_error());
  return kExitValidation;
}

// Owns a scenario handle for the duration of one command.
class Scenario {
 public:
  ~Scenario() { ba_scenario_free(handle_); }
  ba_scenario* get() const { return handle_; }
  ba_scenario** out() { return &handle_; }

 private:
  ba_scenario* handle_ = nullptr;
};

ba_status load(const Options& o, const char* grid_key, Scenario& s) {
  std::map<std::string, std::string> kv;
  for (const auto& item : o.sets) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "error: --set expects section.key=value, got '%s'\n", item.c_str());
      return BA_INVALID_ARGUMENT;
    }
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  if (o.seed) kv["run.seed"] = std::to_string(*o.seed);
  if (o.replicates) kv["run.replicates"] = std::to_string(*o.replicates);
  if (o.grid && grid_key) kv[grid_key] = std::to_string(*o.grid);
  if (o.workers) kv["run.workers"] = std::to_string(*o.workers);
  if (o.out) kv["output.directory"] = *o.out;
  std::vector<const char*> keys, values;
  for (const auto& [k, v] : kv) {
    keys.push_back(k.c_str());
    values.push_back(v.c_str());
  }
  const ba_status st =
      o.scenario.empty()
          ? ba_scenario_paper_example(s.out())
          : ba_scenario_load(o.scenario.c_str(), keys.data(), values.data(), kv.size(), s.out());
  if (st != BA_OK) {
    std::fprintf(stderr, "error: %s\n", ba_last_error());
    return st;
  }
  for (size_t i = 0; i < ba_scenario_warning_count(s.get()); ++i) {
    std::fprintf(stderr, "warning: %s\n", ba_scenario_warning(s.get(), i));
  }
  return BA_OK;
}

int finish(const Options& o, const Scenario& s, bool extra_precondition = false) {
  if (o.strict && (ba_scenario_warning_count(s.get()) > 0 || extra_precondition)) {
    std::fprintf(stderr, "strict: precondition warnings present\n");
    return kExitPrecondition;
  }
  return kExitOk;
}

int cmd_clear(const Options& o) {
  Scenario s;
  if (load(o, nullptr, s) != BA_OK) return kExitValidation;
  if (o.demand) {
    ba_market m;
    double r = 0.0;
    if (ba_scenario_market(s.get(), &m) != BA_OK || ba_stop_out_yield(*o.demand, &m, &r) != BA_OK) {
      return report_error("clear");
    }
    std::printf("aggregate_demand = %s\nissued = %d\nstop_out = %s\n", g17(*o.demand).c_str(),
                *o.demand >= 1.0 ? 1 : 0, g17(r).c_str());
    return finish(o, s);
  }
  ba_outcome* out = nullptr;
  if (ba_scenario_clear(s.get(), &out) != BA_OK) return report_error("clear");
  std::printf("aggregate_demand = %s\nissued = %d\nstop_out = %s\nmarginal_yield = %s\n",
              g17(ba_outcome_aggregate_demand(out)).c_str(), ba_outcome_issued(out),
              g17(ba_outcome_stop_out(out)).c_str(), g17(ba_outcome_marginal_yield(out)).c_str());
  std::printf("bidder,quantity,yield,allocation\n");
  for (size_t i = 0; i < ba_outcome_count(out); ++i) {
    std::printf("%zu,%s,%s,%s\n", i, g17(ba_outcome_bid_quantity(out, i)).c_str(),
                g17(ba_outcome_bid_yield(out, i)).c_str(), g17(ba_outcome_allocation(out, i)).c_str());
  }
  ba_outcome_free(out);
  return finish(o, s);
}

int cmd_equilibrium(const Options& o) {
  Scenario s;
  if (load(o, nullptr, s) != BA_OK) return kExitValidation;
  ba_equilibrium e;
  if (ba_scenario_equilibrium(s.get(), &e) != BA_OK) return report_error("equilibrium");
  std::printf("c_star = %s\nbid = %s\nweight = %s\nxi = %s\nxi_threshold = %s\n"
              "xi_condition_holds = %d\nstop_out = %s\nresidual_supply = %s\n",
              g17(e.c_star).c_str(), g17(e.bid).c_str(), g17(e.weight).c_str(), g17(e.xi).c_str(),
              g17(e.xi_threshold).c_str(), e.xi_condition_holds, g17(e.stop_out).c_str(),
              g17(e.residual_supply).c_str());
  return finish(o, s, !e.xi_condition_holds);
}

int cmd_yield(const Options& o) {
  Scenario s;
  if (load(o, nullptr, s) != BA_OK) return kExitValidation;
  ba_market m;
  if (ba_scenario_market(s.get(), &m) != BA_OK) return report_error("yield");
  if (o.demand) {
    double r = 0.0;
    if (ba_stop_out_yield(*o.demand, &m, &r) != BA_OK) return report_error("yield");
    std::printf("aggregate_demand = %s\nstop_out = %s\n", g17(*o.demand).c_str(), g17(r).c_str());
    return finish(o, s);
  }
  ba_equilibrium e;
  if (ba_scenario_equilibrium(s.get(), &e) != BA_OK) return report_error("yield");
  std::printf("lambda = %s\nrisk_limit = %s\nsymmetric_stop_out = %s\nengine_stop_out = %s\n",
              g17(m.min_bid).c_str(), g17(e.risk_limit).c_str(), g17(e.stop_out).c_str(),
              g17(m.junk_yield - m.sensitivity * m.bidders * e.bid).c_str());
  return finish(o, s, !e.xi_condition_holds);
}

int cmd_verify(const Options& o) {
  const std::map<std::string, ba_verify_kind> kinds = {{"foc", BA_VERIFY_FOC},
                                                       {"ode", BA_VERIFY_ODE},
                                                       {"bestresponse", BA_VERIFY_BEST_RESPONSE},
                                                       {"second-order", BA_VERIFY_SECOND_ORDER}};
  const ba_verify_kind kind = kinds.at(o.verify_kind);
  Scenario s;
  if (load(o, kind == BA_VERIFY_ODE ? "run.ode_grid" : "run.grid", s) != BA_OK) {
    return kExitValidation;
  }
  ba_verify_result r;
  if (ba_scenario_verify(s.get(), kind, &r) != BA_OK) return report_error("verify");
  std::printf("check = %s\n", o.verify_kind.c_str());
  switch (kind) {
    case BA_VERIFY_ODE:
      std::printf("grid_points = %zu\nmax_residual_analytic = %s\ntolerance_analytic = %s\n"
                  "max_residual_finite_difference = %s\ntolerance_finite_difference = %s\n",
                  r.grid_points, g17(r.value).c_str(), g17(r.tolerance).c_str(),
                  g17(r.fd_value).c_str(), g17(r.fd_tolerance).c_str());
      break;
    case BA_VERIFY_BEST_RESPONSE:
      std::printf("c_star = %s\ngrid_points = %zu\nargmax = %s\npayoff_at_star = %s\n"
                  "best_payoff = %s\nrelative_gap = %s\ntolerance = %s\n",
                  g17(r.c_star).c_str(), r.grid_points, g17(r.argmax).c_str(),
                  g17(r.payoff_at_star).c_str(), g17(r.best_payoff).c_str(), g17(r.value).c_str(),
                  g17(r.tolerance).c_str());
      break;
    default:
      std::printf("c_star = %s\npayoff_at_star = %s\nresidual = %s\ntolerance = %s\n"
                  "diagnostics = %zu\n",
                  g17(r.c_star).c_str(), g17(r.payoff_at_star).c_str(), g17(r.value).c_str(),
                  g17(r.tolerance).c_str(), r.diagnostics);
      break;
  }
  std::printf("precondition_violated = %d\nresult = %s\n", r.precondition_violated,
              r.passed ? "PASS" : "FAIL");
  if (!r.passed) return kExitValidation;
  return finish(o, s, r.precondition_violated != 0);
}

template <class Handle, class Write>
bool write_outputs(const Scenario& s, const Handle* h, Write write) {
  const char* dir = ba_scenario_output_directory(s.get());
  for (ba_format f : {BA_FORMAT_CSV, BA_FORMAT_JSONL}) {
    if (!ba_scenario_wants_format(s.get(), f)) continue;
    char* path = nullptr;
    if (write(h, f, dir, &path) != BA_OK) return false;
    std::printf("wrote %s\n", path);
    ba_string_free(path);
  }
  return true;
}

int cmd_campaign(const Options& o) {
  Scenario s;
  if (load(o, nullptr, s) != BA_OK) return kExitValidation;
  ba_campaign* c = nullptr;
  if (ba_campaign_run(s.get(), &c) != BA_OK) return report_error("campaign");
  ba_campaign_summary sum;
  char* json = nullptr;
  ba_campaign_get_summary(c, &sum);
  ba_campaign_summary_json(c, &json);
  std::printf("%s\n", json);
  ba_string_free(json);
  if (sum.flagged_replicates > 0) {
    std::fprintf(stderr, "warning: %zu replicate(s) flagged\n", sum.flagged_replicates);
  }
  const bool ok = write_outputs(s, c, ba_campaign_write);
  ba_campaign_free(c);
  if (!ok) return report_error("campaign");
  return finish(o, s, sum.flagged_replicates > 0);
}

int cmd_sweep(const Options& o) {
  Scenario s;
  if (load(o, nullptr, s) != BA_OK) return kExitValidation;
  ba_sweep* sw = nullptr;
  if (ba_sweep_run(s.get(), &sw) != BA_OK) return report_error("sweep");
  bool flagged = false;
  std::printf("axis = %s\nbids_strictly_decreasing = %d\nbids_approach_lambda = %d\n"
              "stop_out_constant = %d\n",
              ba_sweep_axis(sw), ba_sweep_bids_strictly_decreasing(sw),
              ba_sweep_bids_approach_lambda(sw), ba_sweep_stop_out_constant(sw));
  std::printf("axis_value,bid,stop_out,xi,flags\n");
  for (size_t i = 0; i < ba_sweep_row_count(sw); ++i) {
    ba_sweep_row r;
    ba_sweep_get_row(sw, i, &r);
    flagged = flagged || r.flags[0] != '\0';
    std::printf("%s,%s,%s,%s,%s\n", g17(r.axis_value).c_str(), g17(r.bid).c_str(),
                g17(r.stop_out).c_str(), g17(r.xi).c_str(), r.flags);
  }
  const bool ok = write_outputs(s, sw, ba_sweep_write);
  ba_sweep_free(sw);
  if (!ok) return report_error("sweep");
  return finish(o, s, flagged);
}

int cmd_paper_example(const Options& o) {
  Scenario s;
  if (load(o, nullptr, s) != BA_OK) return kExitValidation;
  char* text = nullptr;
  int violated = 0;
  if (ba_paper_example_report(s.get(), &text, &violated) != BA_OK) {
    return report_error("paper-example");
  }
  std::fputs(text, stdout);
  ba_string_free(text);
  return finish(o, s, violated != 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform-price bond auction model: clearing, equilibrium bids, verification, "
               "campaigns and sweeps"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* cmd, bool scenario_required) {
    auto* opt = cmd->add_option("--scenario", o.scenario, "Scenario file")->check(CLI::ExistingFile);
    if (scenario_required) opt->required();
    cmd->add_option("--seed", o.seed, "Master seed (overrides run.seed)");
    cmd->add_option("--replicates", o.replicates, "Replicates (overrides run.replicates)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--grid", o.grid, "Grid size for verification")->check(CLI::PositiveNumber);
    cmd->add_option("--workers", o.workers, "Worker threads (overrides run.workers)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", o.out, "Output directory (overrides output.directory)");
    cmd->add_option("--set", o.sets, "Override a scenario key: section.key=value");
    cmd->add_flag("--strict", o.strict, "Exit 2 on equilibrium precondition warnings");
  };

  auto* clear = app.add_subcommand("clear", "Draw one type profile, bid and clear it");
  common(clear, true);
  clear->add_option("--demand", o.demand, "Only price this aggregate demand");
  auto* equilibrium = app.add_subcommand("equilibrium", "Closed-form equilibrium bid at c*");
  common(equilibrium, true);
  auto* yield = app.add_subcommand("yield", "Stop-out yield for a demand or the symmetric profile");
  common(yield, true);
  yield->add_option("--demand", o.demand, "Aggregate demand to price");
  auto* verify = app.add_subcommand("verify", "Numerical equilibrium checks");
  common(verify, true);
  verify->add_option("check", o.verify_kind, "foc | ode | bestresponse | second-order")
      ->required()
      ->check(CLI::IsMember({"foc", "ode", "bestresponse", "second-order"}));
  auto* sweep = app.add_subcommand("sweep", "Comparative-statics sweep from the [sweep] section");
  common(sweep, true);
  auto* campaign = app.add_subcommand("campaign", "Monte Carlo auction campaign");
  common(campaign, true);
  auto* paper = app.add_subcommand("paper-example", "Reconcile the published worked example");
  common(paper, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  if (clear->parsed()) return cmd_clear(o);
  if (equilibrium->parsed()) return cmd_equilibrium(o);
  if (yield->parsed()) return cmd_yield(o);
  if (verify->parsed()) return cmd_verify(o);
  if (sweep->parsed()) return cmd_sweep(o);
  if (campaign->parsed()) return cmd_campaign(o);
  if (paper->parsed()) return cmd_paper_example(o);
  return kExitValidation;
}
