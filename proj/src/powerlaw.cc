// Copyright 2026 The netform Authors
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

#include "netform/powerlaw.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "netform/random.h"

namespace netform {
namespace {

struct Support {
  int lo;
  int hi;
};

Support ClampedSupport(const PowerLawParams& p) {
  if (p.n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(p.gamma > 0.0) || !std::isfinite(p.gamma)) {
    throw std::invalid_argument("gamma must be positive");
  }
  if (p.kmin < 0 || p.kmin > p.kmax) {
    throw std::invalid_argument("need 0 <= kmin <= kmax");
  }
  const int hi = std::min(p.kmax, p.n - 1);
  return {std::min(p.kmin, hi), hi};
}

}  // namespace

std::vector<double> PowerLawCdf(const PowerLawParams& params) {
  const Support s = ClampedSupport(params);
  std::vector<double> cdf;
  double total = 0.0;
  for (int k = s.lo; k <= s.hi; ++k) {
    total += std::pow(static_cast<double>(std::max(k, 1)), -params.gamma);
    cdf.push_back(total);
  }
  for (double& v : cdf) v /= total;
  cdf.back() = 1.0;
  return cdf;
}

DegreeSequence sample_power_law_degrees(const PowerLawParams& params,
                                        uint64_t seed) {
  const Support s = ClampedSupport(params);
  const std::vector<double> cdf = PowerLawCdf(params);
  std::mt19937_64 gen(seed);
  std::vector<int> k(params.n);
  for (int& v : k) {
    const double u = UniformUnit(gen);
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    v = s.lo + static_cast<int>(std::min<std::ptrdiff_t>(
                   it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
  }
  return DegreeSequence(std::move(k));
}

}  // namespace netform
