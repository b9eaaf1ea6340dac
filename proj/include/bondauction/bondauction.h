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

/* C interface to the bondauction library.
 *
 * Every function returns a ba_status. On failure the message is available
 * from ba_last_error() on the calling thread until the next call. Strings
 * returned through char** are owned by the caller and released with
 * ba_string_free(). Handles are released with their *_free function;
 * passing NULL to a free function is a no-op.
 */
#ifndef BONDAUCTION_BONDAUCTION_H_
#define BONDAUCTION_BONDAUCTION_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(BONDAUCTION_BUILDING)
#define BA_API __declspec(dllexport)
#else
#define BA_API __declspec(dllimport)
#endif
#else
#define BA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ba_status {
  BA_OK = 0,
  BA_INVALID_ARGUMENT = 1,
  BA_DOMAIN = 2,
  BA_PARSE = 3,
  BA_IO = 4,
  BA_UNSUPPORTED = 5,
  BA_INTERNAL = 99
} ba_status;

typedef enum ba_format { BA_FORMAT_CSV = 0, BA_FORMAT_JSONL = 1 } ba_format;

typedef enum ba_verify_kind {
  BA_VERIFY_FOC = 0,
  BA_VERIFY_ODE = 1,
  BA_VERIFY_BEST_RESPONSE = 2,
  BA_VERIFY_SECOND_ORDER = 3
} ba_verify_kind;

typedef struct ba_market {
  double junk_yield;            /* Theta */
  double sensitivity;           /* theta */
  int bidders;                  /* n */
  double expected_resale_yield; /* E[r^s] */
  double risk_free;             /* r_f */
  double yield_cap;             /* r_bar */
  double min_bid;               /* lambda */
} ba_market;

typedef struct ba_bid {
  double quantity;
  double yield;
  uint64_t bidder_id;
} ba_bid;

typedef struct ba_equilibrium {
  double c_star;
  double bid;
  double xi;
  double xi_threshold;
  double stop_out;
  double weight;
  double risk_limit; /* symmetric risk limit Theta - theta n lambda */
  double residual_supply;
  int xi_condition_holds;
} ba_equilibrium;

typedef struct ba_verify_result {
  double value;
  double tolerance;
  double fd_value;
  double fd_tolerance;
  double c_star;
  double payoff_at_star;
  double argmax;
  double best_payoff;
  size_t grid_points;
  size_t diagnostics;
  int precondition_violated;
  int passed;
} ba_verify_result;

typedef struct ba_campaign_summary {
  size_t replicates;
  size_t issued;
  size_t flagged_replicates;
  double issuance_rate;
  double mean_stop_out;
  double min_stop_out;
  double max_stop_out;
  double q05, q25, q50, q75, q95;
} ba_campaign_summary;

typedef struct ba_sweep_row {
  double axis_value;
  double bid;
  double stop_out;
  double xi;
  double lambda;
  const char* flags; /* '|'-joined, owned by the sweep handle */
} ba_sweep_row;

typedef struct ba_scenario ba_scenario;
typedef struct ba_outcome ba_outcome;
typedef struct ba_campaign ba_campaign;
typedef struct ba_sweep ba_sweep;

BA_API const char* ba_version(void);
BA_API const char* ba_last_error(void);
BA_API void ba_string_free(char* text);

/* Low-level model functions. */
BA_API ba_status ba_validate_market(const ba_market* market, char** violations);
BA_API ba_status ba_stop_out_yield(double demand, const ba_market* market, double* stop_out);
BA_API ba_status ba_xi(const ba_market* market, double* xi, double* threshold, int* holds);
BA_API ba_status ba_infimum_bid(double risk_limit, const ba_market* market, double* min_bid);
BA_API ba_status ba_symmetric_risk_limit(double min_bid, const ba_market* market,
                                         double* risk_limit);
/* Allocation rule alpha(c) = intercept + slope c. */
BA_API ba_status ba_equilibrium_bid(double c_star, double c_ell, double slope, double intercept,
                                    const ba_market* market, ba_equilibrium* out);
BA_API ba_status ba_clear(const ba_bid* bids, size_t count, const ba_market* market,
                          ba_outcome** out);

/* Clearing outcomes. Allocations are in input order. */
BA_API void ba_outcome_free(ba_outcome* outcome);
BA_API double ba_outcome_stop_out(const ba_outcome* outcome);
BA_API int ba_outcome_issued(const ba_outcome* outcome);
BA_API double ba_outcome_aggregate_demand(const ba_outcome* outcome);
BA_API double ba_outcome_marginal_yield(const ba_outcome* outcome);
BA_API size_t ba_outcome_count(const ba_outcome* outcome);
BA_API double ba_outcome_allocation(const ba_outcome* outcome, size_t index);
BA_API double ba_outcome_bid_quantity(const ba_outcome* outcome, size_t index);
BA_API double ba_outcome_bid_yield(const ba_outcome* outcome, size_t index);

/* Scenarios. Overrides are "section.key" = value pairs applied on top of the
 * text; either array may be NULL when count is 0. */
BA_API ba_status ba_scenario_parse(const char* text, const char* const* override_keys,
                                   const char* const* override_values, size_t override_count,
                                   ba_scenario** out);
BA_API ba_status ba_scenario_load(const char* path, const char* const* override_keys,
                                  const char* const* override_values, size_t override_count,
                                  ba_scenario** out);
/* The built-in worked-example scenario. */
BA_API ba_status ba_scenario_paper_example(ba_scenario** out);
BA_API void ba_scenario_free(ba_scenario* scenario);
BA_API ba_status ba_scenario_serialize(const ba_scenario* scenario, char** text);
BA_API ba_status ba_scenario_market(const ba_scenario* scenario, ba_market* market);
BA_API size_t ba_scenario_warning_count(const ba_scenario* scenario);
BA_API const char* ba_scenario_warning(const ba_scenario* scenario, size_t index);
BA_API const char* ba_scenario_output_directory(const ba_scenario* scenario);
BA_API int ba_scenario_wants_format(const ba_scenario* scenario, ba_format format);

/* Operations on a scenario. */
BA_API ba_status ba_scenario_equilibrium(const ba_scenario* scenario, ba_equilibrium* out);
/* One type profile drawn with the scenario seed, bid and cleared. */
BA_API ba_status ba_scenario_clear(const ba_scenario* scenario, ba_outcome** out);
BA_API ba_status ba_scenario_verify(const ba_scenario* scenario, ba_verify_kind kind,
                                    ba_verify_result* out);
BA_API ba_status ba_paper_example_report(const ba_scenario* scenario, char** text,
                                         int* xi_violated);

/* Campaigns. */
BA_API ba_status ba_campaign_run(const ba_scenario* scenario, ba_campaign** out);
BA_API void ba_campaign_free(ba_campaign* campaign);
BA_API ba_status ba_campaign_get_summary(const ba_campaign* campaign, ba_campaign_summary* out);
BA_API ba_status ba_campaign_summary_json(const ba_campaign* campaign, char** json);
BA_API ba_status ba_campaign_write(const ba_campaign* campaign, ba_format format,
                                   const char* directory, char** path);

/* Comparative-statics sweeps; the scenario needs a [sweep] section. */
BA_API ba_status ba_sweep_run(const ba_scenario* scenario, ba_sweep** out);
BA_API void ba_sweep_free(ba_sweep* sweep);
BA_API size_t ba_sweep_row_count(const ba_sweep* sweep);
BA_API ba_status ba_sweep_get_row(const ba_sweep* sweep, size_t index, ba_sweep_row* out);
BA_API const char* ba_sweep_axis(const ba_sweep* sweep);
BA_API int ba_sweep_bids_strictly_decreasing(const ba_sweep* sweep);
BA_API int ba_sweep_bids_approach_lambda(const ba_sweep* sweep);
BA_API int ba_sweep_stop_out_constant(const ba_sweep* sweep);
BA_API ba_status ba_sweep_write(const ba_sweep* sweep, ba_format format, const char* directory,
                                char** path);

#ifdef __cplusplus
}
#endif

#endif  // BONDAUCTION_BONDAUCTION_H_
