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

#include <cstddef>
#include <vector>

namespace bondauction {

/// Gauss-Legendre rule on [-1, 1]. Nodes come from Newton iteration on the
/// three-term Legendre recurrence; exact for polynomials of degree 2n - 1.
class GaussLegendre {
 public:
  explicit GaussLegendre(std::size_t order);

  std::size_t order() const { return nodes_.size(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  /// Composite rule: [a, b] split into `panels` equal panels.
  template <class F>
  double integrate(F&& f, double a, double b, std::size_t panels = 1) const {
    const double width = (b - a) / static_cast<double>(panels);
    double total = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
      const double lo = a + width * static_cast<double>(p);
      const double half = 0.5 * width;
      const double mid = lo + half;
      double s = 0.0;
      for (std::size_t i = 0; i < nodes_.size(); ++i) s += weights_[i] * f(mid + half * nodes_[i]);
      total += half * s;
    }
    return total;
  }

  /// Physical nodes and weights of the composite rule on [a, b].
  void composite(double a, double b, std::size_t panels, std::vector<double>& x,
                 std::vector<double>& w) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace bondauction
