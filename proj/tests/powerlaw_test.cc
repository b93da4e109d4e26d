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

#include <stdexcept>

#include "gtest/gtest.h"

namespace netform {
namespace {

TEST(PowerLawTest, SameSeedSameSequence) {
  const PowerLawParams p{200, 2.5, 1, 40};
  EXPECT_EQ(sample_power_law_degrees(p, 7), sample_power_law_degrees(p, 7));
  EXPECT_NE(sample_power_law_degrees(p, 7), sample_power_law_degrees(p, 8));
}

TEST(PowerLawTest, StaysInRange) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const PowerLawParams p{50, 2.0, 2, 9};
    const DegreeSequence k = sample_power_law_degrees(p, seed);
    ASSERT_EQ(k.n(), 50);
    for (int v : k.values()) {
      EXPECT_GE(v, 2);
      EXPECT_LE(v, 9);
    }
  }
}

TEST(PowerLawTest, ClampsToPlayerCount) {
  const DegreeSequence k = sample_power_law_degrees({5, 1.0, 3, 100}, 1);
  for (int v : k.values()) {
    EXPECT_GE(v, 3);
    EXPECT_LE(v, 4);
  }
  EXPECT_EQ(sample_power_law_degrees({1, 2.0, 1, 3}, 1), DegreeSequence({0}));
}

TEST(PowerLawTest, CdfIsMonotoneAndEndsAtOne) {
  const auto cdf = PowerLawCdf({100, 2.2, 0, 20});
  ASSERT_EQ(cdf.size(), 21u);
  for (size_t t = 1; t < cdf.size(); ++t) EXPECT_GE(cdf[t], cdf[t - 1]);
  EXPECT_DOUBLE_EQ(cdf.back(), 1.0);
}

TEST(PowerLawTest, HeavierAtLowDegrees) {
  const DegreeSequence k = sample_power_law_degrees({5000, 2.5, 1, 50}, 3);
  int ones = 0, big = 0;
  for (int v : k.values()) {
    ones += v == 1;
    big += v >= 10;
  }
  EXPECT_GT(ones, 10 * big);
}

TEST(PowerLawTest, RejectsBadParameters) {
  EXPECT_THROW(PowerLawCdf({0, 2.0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(PowerLawCdf({5, 0.0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(PowerLawCdf({5, 2.0, -1, 1}), std::invalid_argument);
  EXPECT_THROW(PowerLawCdf({5, 2.0, 3, 2}), std::invalid_argument);
}

}  // namespace
}  // namespace netform
