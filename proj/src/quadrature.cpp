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

#include "bondauction/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "bondauction/common.hpp"

namespace bondauction {

GaussLegendre::GaussLegendre(std::size_t order) {
  if (order == 0) throw Error(ErrorCode::kInvalidArgument, "quadrature order must be positive");
  nodes_.resize(order);
  weights_.resize(order);
  const std::size_t m = (order + 1) / 2;
  const double n = static_cast<double>(order);
  for (std::size_t i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (std::size_t j = 1; j <= order; ++j) {
        const double p2 = p1;
        p1 = p0;
        const double jj = static_cast<double>(j);
        p0 = ((2.0 * jj - 1.0) * z * p1 - (jj - 1.0) * p2) / jj;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-16) break;
    }
    nodes_[i] = -z;
    nodes_[order - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    weights_[i] = w;
    weights_[order - 1 - i] = w;
  }
}

void GaussLegendre::composite(double a, double b, std::size_t panels, std::vector<double>& x,
                              std::vector<double>& w) const {
  x.clear();
  w.clear();
  const double width = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double half = 0.5 * width;
    const double mid = a + width * static_cast<double>(p) + half;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      x.push_back(mid + half * nodes_[i]);
      w.push_back(half * weights_[i]);
    }
  }
}

}  // namespace bondauction
