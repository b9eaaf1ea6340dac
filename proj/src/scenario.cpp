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

#include "bondauction/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace bondauction {
namespace {

enum class Kind { kNumber, kInteger, kString, kBool, kNumberList, kStringList };

const std::map<std::string, Kind>& schema() {
  static const std::map<std::string, Kind> keys = {
      {"market.Theta", Kind::kNumber},
      {"market.theta", Kind::kNumber},
      {"market.n", Kind::kInteger},
      {"market.exp_rs", Kind::kNumber},
      {"market.r_f", Kind::kNumber},
      {"market.r_bar", Kind::kNumber},
      {"mandate.c_ell", Kind::kNumber},
      {"mandate.c_bar", Kind::kNumber},
      {"mandate.c_star", Kind::kNumber},
      {"mandate.lambda", Kind::kNumber},
      {"mandate.r_ell", Kind::kNumber},
      {"allocation.slope", Kind::kNumber},
      {"allocation.intercept", Kind::kNumber},
      {"allocation.alpha_ell", Kind::kNumber},
      {"allocation.alpha_star", Kind::kNumber},
      {"distribution.kind", Kind::kString},
      {"distribution.c", Kind::kNumber},
      {"distribution.r_ell", Kind::kNumber},
      {"distribution.c_lo", Kind::kNumber},
      {"distribution.c_hi", Kind::kNumber},
      {"distribution.r_lo", Kind::kNumber},
      {"distribution.r_hi", Kind::kNumber},
      {"distribution.c_mean", Kind::kNumber},
      {"distribution.c_sd", Kind::kNumber},
      {"distribution.r_mean", Kind::kNumber},
      {"distribution.r_sd", Kind::kNumber},
      {"distribution.c_p_lo", Kind::kNumber},
      {"distribution.r_p_lo", Kind::kNumber},
      {"run.seed", Kind::kInteger},
      {"run.replicates", Kind::kInteger},
      {"run.strategy", Kind::kString},
      {"run.fixed_bid", Kind::kNumber},
      {"run.workers", Kind::kInteger},
      {"run.payoff_method", Kind::kString},
      {"run.payoff_resolution", Kind::kInteger},
      {"run.grid", Kind::kInteger},
      {"run.ode_grid", Kind::kInteger},
      {"run.foc_step", Kind::kNumber},
      {"run.second_order_step", Kind::kNumber},
      {"run.ode_fd_step", Kind::kNumber},
      {"run.foc_tol", Kind::kNumber},
      {"run.gap_tol", Kind::kNumber},
      {"run.second_order_tol", Kind::kNumber},
      {"run.ode_tol", Kind::kNumber},
      {"run.ode_fd_tol", Kind::kNumber},
      {"output.directory", Kind::kString},
      {"output.formats", Kind::kStringList},
      {"sweep.axis", Kind::kString},
      {"sweep.values", Kind::kNumberList},
      {"sweep.hold_lambda_n", Kind::kBool},
  };
  return keys;
}

const std::set<std::string>& sections() {
  static const std::set<std::string> names = {"market",       "mandate", "allocation", "distribution",
                                              "run",          "output",  "sweep"};
  return names;
}

// Distribution keys used by each kind, besides `kind` itself.
std::vector<std::string> distribution_keys(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::kPointMass: return {"c", "r_ell"};
    case DistributionKind::kUniform: return {"c_lo", "c_hi", "r_lo", "r_hi"};
    case DistributionKind::kTruncatedNormal:
      return {"c_lo", "c_hi", "r_lo", "r_hi", "c_mean", "c_sd", "r_mean", "r_sd"};
    case DistributionKind::kTwoPoint: return {"c_lo", "c_hi", "r_lo", "r_hi", "c_p_lo", "r_p_lo"};
  }
  return {};
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::optional<double> to_number(const std::string& s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, v);
  if (r.ec != std::errc() || r.ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<std::int64_t> to_integer(const std::string& s) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, v);
  if (r.ec != std::errc() || r.ptr != end) return std::nullopt;
  return v;
}

struct Entry {
  std::string value;
  int line = 0;  // 0 for overrides
};

class Reader {
 public:
  explicit Reader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  std::vector<std::string>& issues() { return issues_; }

  void issue(const std::string& key, const std::string& msg) {
    auto it = entries_.find(key);
    std::string where = (it != entries_.end() && it->second.line > 0)
                            ? "line " + std::to_string(it->second.line) + ": "
                            : "";
    issues_.push_back(where + key + ": " + msg);
  }

  void missing(const std::string& key) { issues_.push_back("missing required key '" + key + "'"); }

  std::optional<double> number(const std::string& key, bool required) {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      if (required) missing(key);
      return std::nullopt;
    }
    auto v = to_number(it->second.value);
    if (!v) issue(key, "expected a number, got '" + it->second.value + "'");
    return v;
  }

  std::optional<std::int64_t> integer(const std::string& key, bool required) {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      if (required) missing(key);
      return std::nullopt;
    }
    auto v = to_integer(it->second.value);
    if (!v) issue(key, "expected an integer, got '" + it->second.value + "'");
    return v;
  }

  std::optional<std::string> string(const std::string& key, bool required) {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      if (required) missing(key);
      return std::nullopt;
    }
    if (it->second.value.empty()) {
      issue(key, "expected a non-empty value");
      return std::nullopt;
    }
    return it->second.value;
  }

  std::optional<bool> boolean(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    if (it->second.value == "true") return true;
    if (it->second.value == "false") return false;
    issue(key, "expected true or false, got '" + it->second.value + "'");
    return std::nullopt;
  }

  std::optional<std::vector<double>> numbers(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    std::vector<double> out;
    for (const auto& item : split_list(it->second.value)) {
      auto v = to_number(item);
      if (!v) {
        issue(key, "expected a comma-separated list of numbers, got '" + item + "'");
        return std::nullopt;
      }
      out.push_back(*v);
    }
    return out;
  }

  std::optional<std::vector<std::string>> strings(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return split_list(it->second.value);
  }

  template <class T>
  void assign(T& target, const std::optional<T>& v) {
    if (v) target = *v;
  }

 private:
  std::map<std::string, Entry> entries_;
  std::vector<std::string> issues_;
};

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::map<std::string, Entry> collect(const std::string& text,
                                     const std::map<std::string, std::string>& overrides,
                                     std::vector<std::string>& issues) {
  std::map<std::string, Entry> entries;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    const std::string where = "line " + std::to_string(line) + ": ";
    if (s.front() == '[') {
      if (s.back() != ']') {
        issues.push_back(where + "malformed section header '" + s + "'");
        continue;
      }
      section = trim(s.substr(1, s.size() - 2));
      if (!sections().count(section)) {
        issues.push_back(where + "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      issues.push_back(where + "expected 'key = value', got '" + s + "'");
      continue;
    }
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (section.empty()) {
      issues.push_back(where + "key '" + key + "' appears before any [section]");
      continue;
    }
    const std::string path = section + "." + key;
    if (!schema().count(path)) {
      if (sections().count(section)) issues.push_back(where + "unknown key '" + path + "'");
      continue;
    }
    if (entries.count(path)) {
      issues.push_back(where + "duplicate key '" + path + "' (first on line " +
                       std::to_string(entries[path].line) + ")");
      continue;
    }
    entries[path] = {value, line};
  }
  for (const auto& [key, value] : overrides) {
    if (!schema().count(key)) {
      issues.push_back("override: unknown key '" + key + "'");
      continue;
    }
    entries[key] = {value, 0};
  }
  return entries;
}

}  // namespace

ScenarioError::ScenarioError(std::vector<std::string> issues)
    : Error(ErrorCode::kParse, "invalid scenario:\n  " + join(issues, "\n  ")),
      issues_(std::move(issues)) {}

AllocationFn ScenarioConfig::allocation_fn() const {
  if (allocation.form == AllocationForm::kPoints) {
    return AllocationFn::through(mandate.c_ell, allocation.alpha_ell, mandate.c_star,
                                 allocation.alpha_star);
  }
  return AllocationFn(allocation.slope, allocation.intercept);
}

PayoffSetup ScenarioConfig::payoff_setup() const {
  PayoffOptions opt;
  opt.method = run.payoff_method;
  opt.resolution = run.payoff_resolution;
  opt.seed = run.seed;
  opt.workers = run.workers;
  return equilibrium_setup(market, distribution, mandate.c_ell, mandate.c_bar, allocation_fn(), opt);
}

CampaignSpec ScenarioConfig::campaign_spec() const {
  CampaignSpec s;
  s.params = market;
  s.dist = distribution;
  s.strategy = run.strategy;
  s.c_ell = mandate.c_ell;
  s.c_bar = mandate.c_bar;
  s.alloc = allocation_fn();
  s.fixed_bid = run.fixed_bid;
  s.replicates = run.replicates;
  s.seed = run.seed;
  s.workers = run.workers;
  return s;
}

SweepSpec ScenarioConfig::sweep_spec() const {
  SweepSpec s;
  s.axis = sweep.axis;
  s.values = sweep.values;
  s.baseline = market;
  s.c_ell = mandate.c_ell;
  s.c_star = mandate.c_star;
  s.alloc = allocation_fn();
  s.hold_lambda_n = sweep.hold_lambda_n;
  return s;
}

bool ScenarioConfig::xi_condition_holds() const {
  try {
    return xi(market).condition_holds;
  } catch (const Error&) {
    return false;
  }
}

ScenarioConfig parse_scenario(const std::string& text,
                              const std::map<std::string, std::string>& overrides) {
  std::vector<std::string> issues;
  Reader r(collect(text, overrides, issues));
  ScenarioConfig c;

  // [market]
  r.assign(c.market.junk_yield, r.number("market.Theta", true));
  r.assign(c.market.sensitivity, r.number("market.theta", true));
  if (auto n = r.integer("market.n", true)) c.market.bidders = static_cast<int>(*n);
  r.assign(c.market.expected_resale_yield, r.number("market.exp_rs", true));
  r.assign(c.market.risk_free, r.number("market.r_f", true));
  r.assign(c.market.yield_cap, r.number("market.r_bar", true));

  // [mandate]
  r.assign(c.mandate.c_ell, r.number("mandate.c_ell", true));
  r.assign(c.mandate.c_bar, r.number("mandate.c_bar", true));
  const auto c_star = r.number("mandate.c_star", false);
  c.mandate.c_star_given = r.has("mandate.c_star");
  c.mandate.c_star = c_star ? *c_star : c.mandate.c_bar;
  const auto lambda = r.number("mandate.lambda", false);
  const auto r_ell = r.number("mandate.r_ell", false);
  const bool has_lambda = r.has("mandate.lambda");
  const bool has_r_ell = r.has("mandate.r_ell");
  if (!has_lambda && !has_r_ell) {
    r.issues().push_back("missing required key 'mandate.lambda' (or 'mandate.r_ell')");
  }
  c.mandate.source = has_lambda && has_r_ell ? MinBidSource::kBoth
                     : has_r_ell             ? MinBidSource::kRiskLimit
                                             : MinBidSource::kLambda;

  // [allocation]
  const bool slope_form = r.has("allocation.slope") || r.has("allocation.intercept");
  const bool points_form = r.has("allocation.alpha_ell") || r.has("allocation.alpha_star");
  if (slope_form && points_form) {
    r.issues().push_back(
        "allocation: give either slope/intercept or alpha_ell/alpha_star, not both");
  } else if (points_form) {
    c.allocation.form = AllocationForm::kPoints;
    r.assign(c.allocation.alpha_ell, r.number("allocation.alpha_ell", true));
    r.assign(c.allocation.alpha_star, r.number("allocation.alpha_star", true));
  } else {
    r.assign(c.allocation.slope, r.number("allocation.slope", false));
    r.assign(c.allocation.intercept, r.number("allocation.intercept", false));
  }

  // [distribution]
  if (auto kind = r.string("distribution.kind", true)) {
    try {
      c.distribution.kind = distribution_kind_from_string(*kind);
      const auto used = distribution_keys(c.distribution.kind);
      for (const auto& [key, kk] : schema()) {
        if (key.rfind("distribution.", 0) != 0 || key == "distribution.kind") continue;
        const std::string name = key.substr(13);
        if (r.has(key) && std::find(used.begin(), used.end(), name) == used.end()) {
          r.issue(key, std::string("not used by distribution kind '") + *kind + "'");
        }
      }
      auto& b = c.distribution.budget;
      auto& q = c.distribution.risk_limit;
      switch (c.distribution.kind) {
        case DistributionKind::kPointMass: {
          r.assign(b.lo, r.number("distribution.c", true));
          r.assign(q.lo, r.number("distribution.r_ell", true));
          b.hi = b.lo;
          q.hi = q.lo;
          break;
        }
        case DistributionKind::kTruncatedNormal:
          r.assign(b.mean, r.number("distribution.c_mean", true));
          r.assign(b.sd, r.number("distribution.c_sd", true));
          r.assign(q.mean, r.number("distribution.r_mean", true));
          r.assign(q.sd, r.number("distribution.r_sd", true));
          [[fallthrough]];
        case DistributionKind::kUniform:
        case DistributionKind::kTwoPoint:
          r.assign(b.lo, r.number("distribution.c_lo", true));
          r.assign(b.hi, r.number("distribution.c_hi", true));
          r.assign(q.lo, r.number("distribution.r_lo", true));
          r.assign(q.hi, r.number("distribution.r_hi", true));
          if (c.distribution.kind == DistributionKind::kTwoPoint) {
            r.assign(b.p_lo, r.number("distribution.c_p_lo", false));
            r.assign(q.p_lo, r.number("distribution.r_p_lo", false));
          }
          break;
      }
    } catch (const Error& e) {
      r.issue("distribution.kind", e.what());
    }
  }

  // [run]
  if (auto v = r.integer("run.seed", false)) {
    if (*v < 0) r.issue("run.seed", "must be non-negative");
    c.run.seed = static_cast<std::uint64_t>(*v);
  }
  const auto positive_count = [&](const char* key, std::size_t& target) {
    if (auto v = r.integer(key, false)) {
      if (*v < 1) r.issue(key, "must be >= 1");
      else target = static_cast<std::size_t>(*v);
    }
  };
  positive_count("run.replicates", c.run.replicates);
  positive_count("run.payoff_resolution", c.run.payoff_resolution);
  positive_count("run.grid", c.run.grid);
  positive_count("run.ode_grid", c.run.ode_grid);
  std::size_t workers = c.run.workers;
  positive_count("run.workers", workers);
  c.run.workers = static_cast<unsigned>(workers);
  if (auto s = r.string("run.strategy", false)) {
    try {
      c.run.strategy = strategy_kind_from_string(*s);
    } catch (const Error& e) {
      r.issue("run.strategy", e.what());
    }
  }
  if (auto s = r.string("run.payoff_method", false)) {
    if (*s == "quadrature") c.run.payoff_method = PayoffMethod::kQuadrature;
    else if (*s == "monte-carlo") c.run.payoff_method = PayoffMethod::kMonteCarlo;
    else r.issue("run.payoff_method", "expected quadrature or monte-carlo, got '" + *s + "'");
  }
  r.assign(c.run.fixed_bid, r.number("run.fixed_bid", false));
  const auto positive_number = [&](const char* key, double& target) {
    if (auto v = r.number(key, false)) {
      if (!(*v > 0.0)) r.issue(key, "must be positive");
      else target = *v;
    }
  };
  positive_number("run.foc_step", c.run.foc_step);
  positive_number("run.second_order_step", c.run.second_order_step);
  positive_number("run.ode_fd_step", c.run.ode_fd_step);
  positive_number("run.foc_tol", c.run.foc_tol);
  positive_number("run.gap_tol", c.run.gap_tol);
  positive_number("run.second_order_tol", c.run.second_order_tol);
  positive_number("run.ode_tol", c.run.ode_tol);
  positive_number("run.ode_fd_tol", c.run.ode_fd_tol);

  // [output]
  if (auto d = r.string("output.directory", false)) c.output.directory = *d;
  if (auto f = r.strings("output.formats")) {
    c.output.csv = c.output.jsonl = false;
    for (const auto& item : *f) {
      if (item == "csv") c.output.csv = true;
      else if (item == "jsonl" || item == "json-lines") c.output.jsonl = true;
      else r.issue("output.formats", "unknown format '" + item + "'");
    }
  }

  // [sweep]
  c.sweep.present = r.has("sweep.axis") || r.has("sweep.values") || r.has("sweep.hold_lambda_n");
  if (c.sweep.present) {
    if (auto a = r.string("sweep.axis", true)) {
      try {
        c.sweep.axis = sweep_axis_from_string(*a);
      } catch (const Error& e) {
        r.issue("sweep.axis", e.what());
      }
    }
    if (!r.has("sweep.values")) r.missing("sweep.values");
    r.assign(c.sweep.values, r.numbers("sweep.values"));
    r.assign(c.sweep.hold_lambda_n, r.boolean("sweep.hold_lambda_n"));
  }

  if (!r.issues().empty() || !issues.empty()) {
    issues.insert(issues.end(), r.issues().begin(), r.issues().end());
    throw ScenarioError(std::move(issues));
  }

  // Cross-field checks, all values present and well typed from here on.
  MarketParams& m = c.market;
  const double scale = m.sensitivity * m.bidders;
  if (has_lambda) {
    c.mandate.lambda = *lambda;
    c.mandate.r_ell = m.junk_yield - scale * c.mandate.lambda;
    if (has_r_ell && std::fabs(c.mandate.r_ell - *r_ell) > 1e-12) {
      r.issue("mandate.r_ell", "inconsistent with mandate.lambda: lambda implies r_ell = " +
                                   format_double(c.mandate.r_ell));
    }
  } else {
    c.mandate.r_ell = *r_ell;
    try {
      c.mandate.lambda = infimum_bid_for_risk_limit(*r_ell, m);
    } catch (const Error& e) {
      r.issue("mandate.r_ell", e.what());
    }
  }
  m.min_bid = c.mandate.lambda;

  for (const auto& v : validate_params(m)) r.issues().push_back("market: " + v.message());
  const auto& md = c.mandate;
  if (!(md.c_ell > 0.0 && md.c_ell <= md.c_star && md.c_star <= md.c_bar && md.c_bar <= 1.0)) {
    r.issues().push_back("mandate: need 0 < c_ell <= c_star <= c_bar <= 1");
  } else {
    try {
      c.allocation_fn().check_domain(md.c_ell, md.c_bar);
    } catch (const Error& e) {
      r.issues().push_back(std::string("allocation: ") + e.what());
    }
  }
  try {
    validate_distribution(c.distribution);
  } catch (const Error& e) {
    r.issues().push_back(std::string("distribution: ") + e.what());
  }
  if (c.run.strategy == StrategyKind::kFixed && !(c.run.fixed_bid >= 0.0)) {
    r.issue("run.fixed_bid", "must be non-negative");
  }
  if (c.sweep.present) {
    const auto& v = c.sweep.values;
    bool up = true, down = true;
    for (std::size_t i = 1; i < v.size(); ++i) {
      up = up && v[i] > v[i - 1];
      down = down && v[i] < v[i - 1];
    }
    if (!up && !down) r.issue("sweep.values", "must be strictly monotone");
  }
  if (!r.issues().empty()) throw ScenarioError(r.issues());

  // Warnings: reported with the config, never fatal.
  const XiResult x = xi(m);
  if (!x.condition_holds) {
    c.warnings.push_back("xi = " + format_double(x.value) + " violates xi < 1/(lambda n) = " +
                         format_double(x.threshold) + ": equilibrium precondition violated");
  }
  if (md.r_ell < m.risk_free) {
    c.warnings.push_back("symmetric risk limit " + format_double(md.r_ell) +
                         " is below r_f (mandate/market mismatch)");
  }
  const auto& rl = c.distribution.risk_limit;
  if (rl.lo < m.risk_free || rl.hi > m.yield_cap) {
    c.warnings.push_back("risk-limit support extends outside [r_f, r_bar]");
  }
  return c;
}

ScenarioConfig load_scenario(const std::string& path,
                             const std::map<std::string, std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read scenario file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), overrides);
}

std::string serialize_scenario(const ScenarioConfig& c) {
  std::ostringstream o;
  const auto num = [&](const char* key, double v) { o << key << " = " << format_double(v) << "\n"; };
  const auto& m = c.market;
  o << "[market]\n";
  num("Theta", m.junk_yield);
  num("theta", m.sensitivity);
  o << "n = " << m.bidders << "\n";
  num("exp_rs", m.expected_resale_yield);
  num("r_f", m.risk_free);
  num("r_bar", m.yield_cap);

  o << "\n[mandate]\n";
  num("c_ell", c.mandate.c_ell);
  num("c_bar", c.mandate.c_bar);
  if (c.mandate.c_star_given) num("c_star", c.mandate.c_star);
  if (c.mandate.source != MinBidSource::kRiskLimit) num("lambda", c.mandate.lambda);
  if (c.mandate.source == MinBidSource::kRiskLimit) num("r_ell", c.mandate.r_ell);

  o << "\n[allocation]\n";
  if (c.allocation.form == AllocationForm::kPoints) {
    num("alpha_ell", c.allocation.alpha_ell);
    num("alpha_star", c.allocation.alpha_star);
  } else {
    num("slope", c.allocation.slope);
    num("intercept", c.allocation.intercept);
  }

  const auto& d = c.distribution;
  o << "\n[distribution]\nkind = " << to_string(d.kind) << "\n";
  switch (d.kind) {
    case DistributionKind::kPointMass:
      num("c", d.budget.lo);
      num("r_ell", d.risk_limit.lo);
      break;
    case DistributionKind::kTruncatedNormal:
      num("c_mean", d.budget.mean);
      num("c_sd", d.budget.sd);
      num("r_mean", d.risk_limit.mean);
      num("r_sd", d.risk_limit.sd);
      [[fallthrough]];
    case DistributionKind::kUniform:
    case DistributionKind::kTwoPoint:
      num("c_lo", d.budget.lo);
      num("c_hi", d.budget.hi);
      num("r_lo", d.risk_limit.lo);
      num("r_hi", d.risk_limit.hi);
      if (d.kind == DistributionKind::kTwoPoint) {
        num("c_p_lo", d.budget.p_lo);
        num("r_p_lo", d.risk_limit.p_lo);
      }
      break;
  }

  const auto& r = c.run;
  o << "\n[run]\n";
  o << "seed = " << r.seed << "\n";
  o << "replicates = " << r.replicates << "\n";
  o << "strategy = " << to_string(r.strategy) << "\n";
  num("fixed_bid", r.fixed_bid);
  o << "workers = " << r.workers << "\n";
  o << "payoff_method = " << to_string(r.payoff_method) << "\n";
  o << "payoff_resolution = " << r.payoff_resolution << "\n";
  o << "grid = " << r.grid << "\n";
  o << "ode_grid = " << r.ode_grid << "\n";
  num("foc_step", r.foc_step);
  num("second_order_step", r.second_order_step);
  num("ode_fd_step", r.ode_fd_step);
  num("foc_tol", r.foc_tol);
  num("gap_tol", r.gap_tol);
  num("second_order_tol", r.second_order_tol);
  num("ode_tol", r.ode_tol);
  num("ode_fd_tol", r.ode_fd_tol);

  o << "\n[output]\n";
  o << "directory = " << c.output.directory << "\n";
  std::vector<std::string> formats;
  if (c.output.csv) formats.push_back("csv");
  if (c.output.jsonl) formats.push_back("jsonl");
  o << "formats = " << join(formats, ", ") << "\n";

  if (c.sweep.present) {
    o << "\n[sweep]\naxis = " << to_string(c.sweep.axis) << "\nvalues = ";
    for (std::size_t i = 0; i < c.sweep.values.size(); ++i) {
      o << (i ? ", " : "") << format_double(c.sweep.values[i]);
    }
    o << "\nhold_lambda_n = " << (c.sweep.hold_lambda_n ? "true" : "false") << "\n";
  }
  return o.str();
}

}  // namespace bondauction
