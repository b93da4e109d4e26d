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

#ifndef NETFORM_RANDOM_H_
#define NETFORM_RANDOM_H_

#include <cstdint>
#include <random>

namespace netform {

// std::uniform_real_distribution is implementation-defined; this mapping is
// not, which keeps seeded output byte-identical across standard libraries.
inline double UniformUnit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double UniformIn(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * UniformUnit(gen);
}

}  // namespace netform

#endif  // NETFORM_RANDOM_H_
