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

/* Exercises the shared library through its C interface only. */

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "bondauction/bondauction.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static const char* kScenario =
    "[market]\nTheta = 0.08\ntheta = 0.034\nn = 10\nexp_rs = 0.04\nr_f = 0.01\nr_bar = 0.06\n"
    "[mandate]\nc_ell = 0.1\nc_star = 0.169\nc_bar = 0.2\nlambda = 0.1\n"
    "[allocation]\nalpha_ell = 0.1\nalpha_star = 0.148\n"
    "[distribution]\nkind = point-mass\nc = 0.1\nr_ell = 0.046\n"
    "[run]\nseed = 4\nreplicates = 5\n"
    "[sweep]\naxis = theta\nvalues = 0.01, 0.02, 0.03\n";

static void test_low_level(void) {
  ba_market m = {0.08, 0.034, 10, 0.04, 0.0, 0.06, 0.1};
  double r = 0.0, x = 0.0, thr = 0.0, lambda = 0.0;
  int holds = -1;
  EXPECT(ba_stop_out_yield(1.0, &m, &r) == BA_OK);
  EXPECT(fabs(r - 0.046) < 1e-15);
  EXPECT(ba_xi(&m, &x, &thr, &holds) == BA_OK);
  EXPECT(fabs(x - 0.85) < 1e-14 && holds == 1);
  EXPECT(ba_infimum_bid(0.046, &m, &lambda) == BA_OK);
  EXPECT(fabs(lambda - 0.1) < 1e-14);
  EXPECT(ba_infimum_bid(0.09, &m, &lambda) == BA_DOMAIN);
  EXPECT(strlen(ba_last_error()) > 0);
  EXPECT(ba_symmetric_risk_limit(0.1, &m, &r) == BA_OK);
  EXPECT(fabs(r - 0.046) < 1e-15);

  ba_market raw = m;
  raw.sensitivity = 0.34;
  ba_equilibrium e;
  /* line through (0.1, 0.1) and (0.169, 0.148) */
  const double slope = 0.048 / 0.069, intercept = 0.1 - slope * 0.1;
  EXPECT(ba_equilibrium_bid(0.169, 0.1, slope, intercept, &raw, &e) == BA_OK);
  EXPECT(fabs(e.bid - 0.0713831) < 1e-6);
  EXPECT(e.xi_condition_holds == 0);
  EXPECT(fabs(e.residual_supply - 0.2861685) < 1e-6);

  char* violations = NULL;
  EXPECT(ba_validate_market(&m, &violations) == BA_OK);
  EXPECT(violations != NULL && violations[0] == '\0');
  ba_string_free(violations);
  m.bidders = 2;
  EXPECT(ba_validate_market(&m, &violations) == BA_OK);
  EXPECT(strstr(violations, "n >= 3") != NULL);
  ba_string_free(violations);
}

static void test_clear(void) {
  ba_market m = {0.10, 0.01, 5, 0.02, 0.0, 0.04, 0.1};
  ba_bid bids[5] = {{0.35, 0.03012, 0}, {0.25, 0.03013, 1}, {0.45, 0.03014, 2},
                    {0.45, 0.03015, 3}, {0.3, 0.03017, 4}};
  ba_outcome* o = NULL;
  EXPECT(ba_clear(bids, 5, &m, &o) == BA_OK);
  EXPECT(ba_outcome_issued(o) == 1);
  EXPECT(ba_outcome_count(o) == 5);
  EXPECT(fabs(ba_outcome_allocation(o, 2) - 0.40) < 1e-15);
  EXPECT(ba_outcome_allocation(o, 4) == 0.0);
  EXPECT(ba_outcome_aggregate_demand(o) == 1.8);
  ba_outcome_free(o);
  EXPECT(ba_clear(bids, 1, &m, &o) == BA_INVALID_ARGUMENT);
  EXPECT(ba_clear(NULL, 0, NULL, &o) == BA_INVALID_ARGUMENT);
}

static void test_scenario(void) {
  ba_scenario* s = NULL;
  const char* keys[] = {"run.replicates"};
  const char* values[] = {"3"};
  EXPECT(ba_scenario_parse(kScenario, keys, values, 1, &s) == BA_OK);
  EXPECT(ba_scenario_warning_count(s) == 0);

  ba_campaign* c = NULL;
  ba_campaign_summary sum;
  EXPECT(ba_campaign_run(s, &c) == BA_OK);
  EXPECT(ba_campaign_get_summary(c, &sum) == BA_OK);
  EXPECT(sum.replicates == 3);
  EXPECT(sum.issuance_rate == 1.0);
  EXPECT(fabs(sum.max_stop_out - 0.046) < 1e-12);
  ba_campaign_free(c);

  ba_sweep* sw = NULL;
  ba_sweep_row row;
  EXPECT(ba_sweep_run(s, &sw) == BA_OK);
  EXPECT(ba_sweep_row_count(sw) == 3);
  EXPECT(ba_sweep_get_row(sw, 0, &row) == BA_OK);
  EXPECT(row.axis_value == 0.01);
  EXPECT(ba_sweep_get_row(sw, 3, &row) == BA_INVALID_ARGUMENT);
  EXPECT(ba_sweep_bids_strictly_decreasing(sw) == 1);
  EXPECT(strcmp(ba_sweep_axis(sw), "theta") == 0);
  ba_sweep_free(sw);

  ba_verify_result v;
  EXPECT(ba_scenario_verify(s, BA_VERIFY_ODE, &v) == BA_OK);
  EXPECT(v.passed == 1 && v.value < 1e-12);

  char* text = NULL;
  ba_scenario* again = NULL;
  EXPECT(ba_scenario_serialize(s, &text) == BA_OK);
  EXPECT(ba_scenario_parse(text, NULL, NULL, 0, &again) == BA_OK);
  ba_string_free(text);
  ba_scenario_free(again);
  ba_scenario_free(s);

  EXPECT(ba_scenario_parse("[market]\nbogus = 1\n", NULL, NULL, 0, &s) == BA_PARSE);
  EXPECT(strstr(ba_last_error(), "bogus") != NULL);
  EXPECT(ba_scenario_load("/nonexistent/x.scenario", NULL, NULL, 0, &s) == BA_IO);
  ba_scenario_free(NULL);
}

static void test_paper_example(void) {
  ba_scenario* s = NULL;
  char* text = NULL;
  int violated = 0;
  EXPECT(ba_scenario_paper_example(&s) == BA_OK);
  EXPECT(ba_scenario_warning_count(s) >= 1);
  EXPECT(ba_paper_example_report(s, &text, &violated) == BA_OK);
  EXPECT(violated == 1);
  EXPECT(strstr(text, "0.07138") != NULL);
  EXPECT(strstr(text, "FLAG") != NULL);
  ba_string_free(text);
  ba_scenario_free(s);
}

int main(void) {
  test_low_level();
  test_clear();
  test_scenario();
  test_paper_example();
  if (failures == 0) printf("capi: all checks passed (%s)\n", ba_version());
  return failures == 0 ? 0 : 1;
}
