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

#include "bondauction/bondauction.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "bondauction/clearing.hpp"
#include "bondauction/equilibrium.hpp"
#include "bondauction/experiments.hpp"
#include "bondauction/output.hpp"
#include "bondauction/reports.hpp"
#include "bondauction/scenario.hpp"

struct ba_scenario {
  bondauction::ScenarioConfig config;
};

struct ba_outcome {
  std::vector<bondauction::BidPoint> bids;
  bondauction::AuctionOutcome outcome;
};

struct ba_campaign {
  bondauction::CampaignResult result;
};

struct ba_sweep {
  bondauction::SweepTable table;
  std::vector<std::string> flags;
};

namespace {

namespace ba = bondauction;

thread_local std::string g_last_error;

ba_status fail(ba_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

ba_status from_code(ba::ErrorCode code) {
  switch (code) {
    case ba::ErrorCode::kInvalidArgument: return BA_INVALID_ARGUMENT;
    case ba::ErrorCode::kDomain: return BA_DOMAIN;
    case ba::ErrorCode::kParse: return BA_PARSE;
    case ba::ErrorCode::kIo: return BA_IO;
    case ba::ErrorCode::kUnsupported: return BA_UNSUPPORTED;
  }
  return BA_INTERNAL;
}

template <class Fn>
ba_status guard(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return BA_OK;
  } catch (const ba::Error& e) {
    return fail(from_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BA_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BA_INTERNAL, e.what());
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) {
    throw ba::Error(ba::ErrorCode::kInvalidArgument, std::string(name) + " must not be NULL");
  }
}

ba::MarketParams to_cpp(const ba_market& m) {
  return {m.junk_yield,         m.sensitivity, m.bidders, m.expected_resale_yield,
          m.risk_free,          m.yield_cap,   m.min_bid};
}

ba_market to_c(const ba::MarketParams& p) {
  return {p.junk_yield,          p.sensitivity, p.bidders, p.expected_resale_yield,
          p.risk_free,           p.yield_cap,   p.min_bid};
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::map<std::string, std::string> overrides(const char* const* keys, const char* const* values,
                                             std::size_t count) {
  std::map<std::string, std::string> out;
  if (count == 0) return out;
  require(keys, "override_keys");
  require(values, "override_values");
  for (std::size_t i = 0; i < count; ++i) {
    require(keys[i], "override key");
    require(values[i], "override value");
    out[keys[i]] = values[i];
  }
  return out;
}

ba::OutputFormat to_cpp(ba_format f) {
  if (f == BA_FORMAT_CSV) return ba::OutputFormat::kCsv;
  if (f == BA_FORMAT_JSONL) return ba::OutputFormat::kJsonLines;
  throw ba::Error(ba::ErrorCode::kInvalidArgument, "unknown output format");
}

ba_equilibrium equilibrium_to_c(const ba::EquilibriumPoint& e, const ba::MarketParams& p) {
  ba_equilibrium out{};
  out.c_star = e.c_star;
  out.bid = e.bid;
  out.xi = e.xi;
  out.xi_threshold = ba::xi(p).threshold;
  out.stop_out = e.stop_out;
  out.weight = e.weight;
  out.risk_limit = p.junk_yield - p.sensitivity * p.bidders * p.min_bid;
  out.residual_supply = 1.0 - p.bidders * e.bid;
  out.xi_condition_holds = e.xi_condition_holds ? 1 : 0;
  return out;
}

}  // namespace

extern "C" {

const char* ba_version(void) { return "1.0.0"; }

const char* ba_last_error(void) { return g_last_error.c_str(); }

void ba_string_free(char* text) { std::free(text); }

ba_status ba_validate_market(const ba_market* market, char** violations) {
  return guard([&] {
    require(market, "market");
    require(violations, "violations");
    std::string text;
    for (const auto& v : ba::validate_params(to_cpp(*market))) text += v.message() + "\n";
    *violations = dup(text);
  });
}

ba_status ba_stop_out_yield(double demand, const ba_market* market, double* stop_out) {
  return guard([&] {
    require(market, "market");
    require(stop_out, "stop_out");
    *stop_out = ba::stop_out_yield(demand, to_cpp(*market));
  });
}

ba_status ba_xi(const ba_market* market, double* xi, double* threshold, int* holds) {
  return guard([&] {
    require(market, "market");
    const ba::XiResult r = ba::xi(to_cpp(*market));
    if (xi) *xi = r.value;
    if (threshold) *threshold = r.threshold;
    if (holds) *holds = r.condition_holds ? 1 : 0;
  });
}

ba_status ba_infimum_bid(double risk_limit, const ba_market* market, double* min_bid) {
  return guard([&] {
    require(market, "market");
    require(min_bid, "min_bid");
    *min_bid = ba::infimum_bid_for_risk_limit(risk_limit, to_cpp(*market));
  });
}

ba_status ba_symmetric_risk_limit(double min_bid, const ba_market* market, double* risk_limit) {
  return guard([&] {
    require(market, "market");
    require(risk_limit, "risk_limit");
    *risk_limit = ba::symmetric_risk_limit(min_bid, to_cpp(*market));
  });
}

ba_status ba_equilibrium_bid(double c_star, double c_ell, double slope, double intercept,
                             const ba_market* market, ba_equilibrium* out) {
  return guard([&] {
    require(market, "market");
    require(out, "out");
    const ba::MarketParams p = to_cpp(*market);
    *out = equilibrium_to_c(ba::equilibrium_bid(c_star, c_ell, ba::AllocationFn(slope, intercept), p),
                            p);
  });
}

ba_status ba_clear(const ba_bid* bids, size_t count, const ba_market* market, ba_outcome** out) {
  return guard([&] {
    require(market, "market");
    require(out, "out");
    if (count > 0) require(bids, "bids");
    auto o = std::make_unique<ba_outcome>();
    for (size_t i = 0; i < count; ++i) o->bids.push_back({bids[i].quantity, bids[i].yield, bids[i].bidder_id});
    o->outcome = ba::clear(o->bids, to_cpp(*market));
    *out = o.release();
  });
}

void ba_outcome_free(ba_outcome* outcome) { delete outcome; }
double ba_outcome_stop_out(const ba_outcome* o) { return o ? o->outcome.stop_out : 0.0; }
int ba_outcome_issued(const ba_outcome* o) { return o && o->outcome.issued ? 1 : 0; }
double ba_outcome_aggregate_demand(const ba_outcome* o) {
  return o ? o->outcome.aggregate_demand : 0.0;
}
double ba_outcome_marginal_yield(const ba_outcome* o) {
  return o ? o->outcome.marginal_yield : 0.0;
}
size_t ba_outcome_count(const ba_outcome* o) { return o ? o->outcome.allocations.size() : 0; }
double ba_outcome_allocation(const ba_outcome* o, size_t i) {
  return o && i < o->outcome.allocations.size() ? o->outcome.allocations[i] : 0.0;
}
double ba_outcome_bid_quantity(const ba_outcome* o, size_t i) {
  return o && i < o->bids.size() ? o->bids[i].quantity : 0.0;
}
double ba_outcome_bid_yield(const ba_outcome* o, size_t i) {
  return o && i < o->bids.size() ? o->bids[i].yield : 0.0;
}

ba_status ba_scenario_parse(const char* text, const char* const* keys, const char* const* values,
                            size_t count, ba_scenario** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    auto s = std::make_unique<ba_scenario>();
    s->config = ba::parse_scenario(text, overrides(keys, values, count));
    *out = s.release();
  });
}

ba_status ba_scenario_load(const char* path, const char* const* keys, const char* const* values,
                           size_t count, ba_scenario** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    auto s = std::make_unique<ba_scenario>();
    s->config = ba::load_scenario(path, overrides(keys, values, count));
    *out = s.release();
  });
}

ba_status ba_scenario_paper_example(ba_scenario** out) {
  return guard([&] {
    require(out, "out");
    auto s = std::make_unique<ba_scenario>();
    s->config = ba::parse_scenario(ba::paper_example_scenario_text());
    *out = s.release();
  });
}

void ba_scenario_free(ba_scenario* scenario) { delete scenario; }

ba_status ba_scenario_serialize(const ba_scenario* scenario, char** text) {
  return guard([&] {
    require(scenario, "scenario");
    require(text, "text");
    *text = dup(ba::serialize_scenario(scenario->config));
  });
}

ba_status ba_scenario_market(const ba_scenario* scenario, ba_market* market) {
  return guard([&] {
    require(scenario, "scenario");
    require(market, "market");
    *market = to_c(scenario->config.market);
  });
}

size_t ba_scenario_warning_count(const ba_scenario* s) { return s ? s->config.warnings.size() : 0; }

const char* ba_scenario_warning(const ba_scenario* s, size_t i) {
  return s && i < s->config.warnings.size() ? s->config.warnings[i].c_str() : nullptr;
}

const char* ba_scenario_output_directory(const ba_scenario* s) {
  return s ? s->config.output.directory.c_str() : nullptr;
}

int ba_scenario_wants_format(const ba_scenario* s, ba_format format) {
  if (!s) return 0;
  if (format == BA_FORMAT_CSV) return s->config.output.csv ? 1 : 0;
  if (format == BA_FORMAT_JSONL) return s->config.output.jsonl ? 1 : 0;
  return 0;
}

ba_status ba_scenario_equilibrium(const ba_scenario* scenario, ba_equilibrium* out) {
  return guard([&] {
    require(scenario, "scenario");
    require(out, "out");
    const auto& c = scenario->config;
    *out = equilibrium_to_c(
        ba::equilibrium_bid(c.mandate.c_star, c.mandate.c_ell, c.allocation_fn(), c.market),
        c.market);
  });
}

ba_status ba_scenario_clear(const ba_scenario* scenario, ba_outcome** out) {
  return guard([&] {
    require(scenario, "scenario");
    require(out, "out");
    ba::ProfileClearing pc = ba::clear_profile(scenario->config);
    auto o = std::make_unique<ba_outcome>();
    o->bids = std::move(pc.bids);
    o->outcome = std::move(pc.outcome);
    *out = o.release();
  });
}

ba_status ba_scenario_verify(const ba_scenario* scenario, ba_verify_kind kind,
                             ba_verify_result* out) {
  return guard([&] {
    require(scenario, "scenario");
    require(out, "out");
    ba::VerifyKind k;
    switch (kind) {
      case BA_VERIFY_FOC: k = ba::VerifyKind::kFoc; break;
      case BA_VERIFY_ODE: k = ba::VerifyKind::kOde; break;
      case BA_VERIFY_BEST_RESPONSE: k = ba::VerifyKind::kBestResponse; break;
      case BA_VERIFY_SECOND_ORDER: k = ba::VerifyKind::kSecondOrder; break;
      default: throw ba::Error(ba::ErrorCode::kInvalidArgument, "unknown verification kind");
    }
    const ba::VerifyReport r = ba::run_verification(scenario->config, k);
    *out = {r.value,        r.tolerance,   r.fd_value,    r.fd_tolerance,
            r.c_star,       r.payoff_at_star, r.argmax,   r.best_payoff,
            r.grid_points,  r.diagnostics, r.precondition_violated ? 1 : 0,
            r.passed ? 1 : 0};
  });
}

ba_status ba_paper_example_report(const ba_scenario* scenario, char** text, int* xi_violated) {
  return guard([&] {
    require(scenario, "scenario");
    require(text, "text");
    const ba::PaperExampleReport r = ba::paper_example_report(scenario->config);
    *text = dup(r.text);
    if (xi_violated) *xi_violated = r.xi_violated ? 1 : 0;
  });
}

ba_status ba_campaign_run(const ba_scenario* scenario, ba_campaign** out) {
  return guard([&] {
    require(scenario, "scenario");
    require(out, "out");
    auto c = std::make_unique<ba_campaign>();
    c->result = ba::run_campaign(scenario->config.campaign_spec());
    *out = c.release();
  });
}

void ba_campaign_free(ba_campaign* campaign) { delete campaign; }

ba_status ba_campaign_get_summary(const ba_campaign* campaign, ba_campaign_summary* out) {
  return guard([&] {
    require(campaign, "campaign");
    require(out, "out");
    const auto& s = campaign->result.summary;
    *out = {s.replicates,    s.issued,        campaign->result.flagged_replicates,
            s.issuance_rate, s.mean_stop_out, s.min_stop_out,
            s.max_stop_out,  s.q05,           s.q25,
            s.q50,           s.q75,           s.q95};
  });
}

ba_status ba_campaign_summary_json(const ba_campaign* campaign, char** json) {
  return guard([&] {
    require(campaign, "campaign");
    require(json, "json");
    *json = dup(ba::campaign_summary_json(campaign->result.summary));
  });
}

ba_status ba_campaign_write(const ba_campaign* campaign, ba_format format, const char* directory,
                            char** path) {
  return guard([&] {
    require(campaign, "campaign");
    require(directory, "directory");
    const std::string p = ba::emit_campaign(campaign->result, to_cpp(format), directory);
    if (path) *path = dup(p);
  });
}

ba_status ba_sweep_run(const ba_scenario* scenario, ba_sweep** out) {
  return guard([&] {
    require(scenario, "scenario");
    require(out, "out");
    if (!scenario->config.sweep.present) {
      throw ba::Error(ba::ErrorCode::kInvalidArgument, "scenario has no [sweep] section");
    }
    auto s = std::make_unique<ba_sweep>();
    s->table = ba::run_sweep(scenario->config.sweep_spec());
    for (const auto& row : s->table.rows) {
      std::string joined;
      for (std::size_t i = 0; i < row.flags.size(); ++i) joined += (i ? "|" : "") + row.flags[i];
      s->flags.push_back(joined);
    }
    *out = s.release();
  });
}

void ba_sweep_free(ba_sweep* sweep) { delete sweep; }

size_t ba_sweep_row_count(const ba_sweep* s) { return s ? s->table.rows.size() : 0; }

ba_status ba_sweep_get_row(const ba_sweep* sweep, size_t index, ba_sweep_row* out) {
  return guard([&] {
    require(sweep, "sweep");
    require(out, "out");
    if (index >= sweep->table.rows.size()) {
      throw ba::Error(ba::ErrorCode::kInvalidArgument, "sweep row index out of range");
    }
    const auto& r = sweep->table.rows[index];
    *out = {r.axis_value, r.bid, r.stop_out, r.xi, r.lambda, sweep->flags[index].c_str()};
  });
}

const char* ba_sweep_axis(const ba_sweep* s) { return s ? ba::to_string(s->table.axis) : nullptr; }
int ba_sweep_bids_strictly_decreasing(const ba_sweep* s) {
  return s && s->table.bids_strictly_decreasing ? 1 : 0;
}
int ba_sweep_bids_approach_lambda(const ba_sweep* s) {
  return s && s->table.bids_approach_lambda ? 1 : 0;
}
int ba_sweep_stop_out_constant(const ba_sweep* s) {
  return s && s->table.stop_out_constant ? 1 : 0;
}

ba_status ba_sweep_write(const ba_sweep* sweep, ba_format format, const char* directory,
                         char** path) {
  return guard([&] {
    require(sweep, "sweep");
    require(directory, "directory");
    const std::string p = ba::emit_sweep(sweep->table, to_cpp(format), directory);
    if (path) *path = dup(p);
  });
}

}  // extern "C"
