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

#include "bondauction/market_model.hpp"

#include <cmath>

#include <boost/math/distributions/normal.hpp>

#include "bondauction/common.hpp"

namespace bondauction {
namespace {

void check(std::vector<Violation>& out, bool ok, const char* invariant, double value) {
  if (!ok || std::isnan(value)) out.push_back({invariant, value});
}

bool finite_all(std::initializer_list<double> xs) {
  for (double x : xs) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

const boost::math::normal& standard_normal() {
  static const boost::math::normal dist(0.0, 1.0);
  return dist;
}

double normal_mass(const Marginal& m) {
  return boost::math::cdf(standard_normal(), (m.hi - m.mean) / m.sd) -
         boost::math::cdf(standard_normal(), (m.lo - m.mean) / m.sd);
}

void validate_marginal(DistributionKind kind, const Marginal& m, const char* name) {
  const std::string prefix = std::string(name) + " marginal: ";
  if (!finite_all({m.lo, m.hi, m.mean, m.sd, m.p_lo})) {
    throw Error(ErrorCode::kInvalidArgument, prefix + "non-finite parameter");
  }
  switch (kind) {
    case DistributionKind::kUniform:
      if (!(m.lo < m.hi)) throw Error(ErrorCode::kInvalidArgument, prefix + "uniform needs lo < hi");
      break;
    case DistributionKind::kTruncatedNormal:
      if (!(m.lo < m.hi)) throw Error(ErrorCode::kInvalidArgument, prefix + "truncated normal needs lo < hi");
      if (!(m.sd > 0.0)) throw Error(ErrorCode::kInvalidArgument, prefix + "truncated normal needs sd > 0");
      if (!(normal_mass(m) > 1e-12)) {
        throw Error(ErrorCode::kInvalidArgument, prefix + "truncated normal has no mass on [lo, hi]");
      }
      break;
    case DistributionKind::kPointMass:
      if (m.lo != m.hi) throw Error(ErrorCode::kInvalidArgument, prefix + "point mass needs lo == hi");
      break;
    case DistributionKind::kTwoPoint:
      if (!(m.lo < m.hi)) throw Error(ErrorCode::kInvalidArgument, prefix + "two-point needs lo < hi");
      if (!(m.p_lo > 0.0 && m.p_lo < 1.0)) {
        throw Error(ErrorCode::kInvalidArgument, prefix + "two-point needs 0 < p_lo < 1");
      }
      break;
  }
}

double draw_marginal(DistributionKind kind, const Marginal& m, Rng& rng, std::size_t& rejections) {
  switch (kind) {
    case DistributionKind::kPointMass:
      return m.lo;
    case DistributionKind::kTwoPoint:
      return rng.uniform() < m.p_lo ? m.lo : m.hi;
    case DistributionKind::kUniform:
      for (;;) {
        const double x = m.lo + (m.hi - m.lo) * rng.uniform();
        if (x >= m.lo && x <= m.hi) return x;
        ++rejections;
      }
    case DistributionKind::kTruncatedNormal: {
      const double fa = boost::math::cdf(standard_normal(), (m.lo - m.mean) / m.sd);
      const double fb = boost::math::cdf(standard_normal(), (m.hi - m.mean) / m.sd);
      for (;;) {
        const double u = fa + (fb - fa) * rng.uniform();
        if (u > 0.0 && u < 1.0) {
          const double x = m.mean + m.sd * boost::math::quantile(standard_normal(), u);
          if (x >= m.lo && x <= m.hi) return x;
        }
        ++rejections;
      }
    }
  }
  throw Error(ErrorCode::kUnsupported, "unsupported distribution kind");
}

}  // namespace

std::string Violation::message() const {
  return invariant + " violated (value = " + format_double(value) + ")";
}

std::vector<Violation> validate_params(const MarketParams& p) {
  std::vector<Violation> out;
  check(out, p.bidders >= 3, "n >= 3", p.bidders);
  check(out, p.min_bid > 0.0 && p.min_bid < 1.0, "0 < lambda_min < 1", p.min_bid);
  check(out, p.junk_yield > p.expected_resale_yield, "Theta > exp_rs", p.junk_yield);
  check(out, p.risk_free <= p.expected_resale_yield, "r_f <= exp_rs", p.risk_free);
  check(out, p.expected_resale_yield <= p.yield_cap, "exp_rs <= r_bar", p.expected_resale_yield);
  check(out, p.yield_cap < p.junk_yield, "r_bar < Theta", p.yield_cap);
  check(out, p.sensitivity > 0.0, "theta > 0", p.sensitivity);
  check(out, std::isfinite(p.junk_yield) && std::isfinite(p.sensitivity) &&
                 std::isfinite(p.expected_resale_yield) && std::isfinite(p.risk_free) &&
                 std::isfinite(p.yield_cap),
        "all yields finite", 0.0);
  return out;
}

const char* to_string(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::kUniform: return "uniform";
    case DistributionKind::kTruncatedNormal: return "truncated-normal";
    case DistributionKind::kPointMass: return "point-mass";
    case DistributionKind::kTwoPoint: return "two-point";
  }
  return "?";
}

DistributionKind distribution_kind_from_string(const std::string& name) {
  if (name == "uniform" || name == "independent-uniform") return DistributionKind::kUniform;
  if (name == "truncated-normal" || name == "independent-truncated-normal") {
    return DistributionKind::kTruncatedNormal;
  }
  if (name == "point-mass") return DistributionKind::kPointMass;
  if (name == "two-point") return DistributionKind::kTwoPoint;
  throw Error(ErrorCode::kUnsupported, "unsupported distribution kind '" + name + "'");
}

void validate_distribution(const TypeDistribution& dist) {
  validate_marginal(dist.kind, dist.budget, "budget");
  validate_marginal(dist.kind, dist.risk_limit, "risk_limit");
  if (dist.budget.lo < 0.0 || dist.budget.hi > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "budget support must lie in [0, 1]");
  }
}

bool is_discrete(DistributionKind kind) {
  return kind == DistributionKind::kPointMass || kind == DistributionKind::kTwoPoint;
}

double marginal_cdf(DistributionKind kind, const Marginal& m, double x) {
  switch (kind) {
    case DistributionKind::kPointMass:
      return x >= m.lo ? 1.0 : 0.0;
    case DistributionKind::kTwoPoint:
      if (x < m.lo) return 0.0;
      return x < m.hi ? m.p_lo : 1.0;
    case DistributionKind::kUniform:
      if (x <= m.lo) return 0.0;
      if (x >= m.hi) return 1.0;
      return (x - m.lo) / (m.hi - m.lo);
    case DistributionKind::kTruncatedNormal: {
      if (x <= m.lo) return 0.0;
      if (x >= m.hi) return 1.0;
      const double fa = boost::math::cdf(standard_normal(), (m.lo - m.mean) / m.sd);
      return (boost::math::cdf(standard_normal(), (x - m.mean) / m.sd) - fa) / normal_mass(m);
    }
  }
  return 0.0;
}

double marginal_pdf(DistributionKind kind, const Marginal& m, double x) {
  if (x < m.lo || x > m.hi) return 0.0;
  switch (kind) {
    case DistributionKind::kUniform:
      return 1.0 / (m.hi - m.lo);
    case DistributionKind::kTruncatedNormal:
      return boost::math::pdf(standard_normal(), (x - m.mean) / m.sd) / (m.sd * normal_mass(m));
    default:
      return 0.0;
  }
}

BidderType draw_type(const TypeDistribution& dist, Rng& rng, std::size_t& rejections) {
  BidderType t;
  t.budget = draw_marginal(dist.kind, dist.budget, rng, rejections);
  t.risk_limit = draw_marginal(dist.kind, dist.risk_limit, rng, rejections);
  return t;
}

double TypeSample::rejection_rate() const {
  const double attempts = static_cast<double>(2 * types.size() + rejections);
  return attempts > 0.0 ? static_cast<double>(rejections) / attempts : 0.0;
}

TypeSample sample_types(const TypeDistribution& dist, int n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "sample_types needs n >= 3");
  validate_distribution(dist);
  Rng rng(seed);
  TypeSample out;
  out.types.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.types.push_back(draw_type(dist, rng, out.rejections));
  return out;
}

double infimum_bid_for_risk_limit(double risk_limit, const MarketParams& p) {
  const double scale = p.sensitivity * p.bidders;
  if (!(scale > 0.0)) throw Error(ErrorCode::kDomain, "theta * n must be positive");
  if (!(risk_limit >= p.risk_free && risk_limit < p.junk_yield)) {
    throw Error(ErrorCode::kDomain, "risk limit " + format_double(risk_limit) +
                                        " outside [r_f, Theta)");
  }
  const double lambda = (p.junk_yield - risk_limit) / scale;
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw Error(ErrorCode::kDomain, "infeasible mandate: minimum bid " + format_double(lambda) +
                                        " outside (0, 1)");
  }
  return lambda;
}

bool is_admissible(const BidPoint& bid, const BidderType& type, const MarketParams& p) {
  double floor = 0.0;
  try {
    floor = infimum_bid_for_risk_limit(type.risk_limit, p);
  } catch (const Error&) {
    return false;
  }
  // Boundary points (L and M) are admissible despite rounding in the floor.
  constexpr double kTol = 1e-12;
  return bid.quantity >= floor - kTol && bid.quantity <= type.budget && bid.yield >= p.risk_free &&
         bid.yield <= type.risk_limit;
}

}  // namespace bondauction
