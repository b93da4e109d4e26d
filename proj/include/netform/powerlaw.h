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

#ifndef NETFORM_POWERLAW_H_
#define NETFORM_POWERLAW_H_

#include <cstdint>
#include <vector>

#include "netform/graph.h"

namespace netform {

struct PowerLawParams {
  int n = 1;
  double gamma = 2.0;
  int kmin = 1;
  int kmax = 1;
};

// Discrete power law P(k) ~ max(k,1)^-gamma on [kmin, kmax]. kmax is
// clamped to n-1 and kmin to the clamped kmax, so n = 1 yields {0}.
// Throws std::invalid_argument for n < 1, gamma <= 0, kmin < 0 or
// kmin > kmax.
std::vector<double> PowerLawCdf(const PowerLawParams& params);

// n independent draws by inverse CDF from an mt19937_64 seeded with seed.
DegreeSequence sample_power_law_degrees(const PowerLawParams& params,
                                        uint64_t seed);

}  // namespace netform

#endif  // NETFORM_POWERLAW_H_
