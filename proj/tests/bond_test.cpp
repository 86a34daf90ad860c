// Copyright 2026 The qaescale Authors
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

#include "qae/bond.hpp"

#include <gtest/gtest.h>

#include "qae/error.hpp"

using namespace qae;
using namespace qae::bond;

TEST(bond, future_value) {
  EXPECT_DOUBLE_EQ(future_value({100.0, 0.0, 0.0, 5}), 100.0);
  EXPECT_DOUBLE_EQ(future_value({1.0, 1.0, 0.0, 1}), 2.0);
  EXPECT_NEAR(future_value({100.0, 0.05, 0.0, 2}), 100.0 * 1.05 * 1.05, 1e-12);
  EXPECT_NEAR(future_value({100.0, 0.05, 0.0, 2}), 110.25, 1e-12);
}

TEST(bond, shifted_value) {
  const RatePath flat{1.0, 0.04, 0.0, 1};
  for (double p : {0.0, 0.3, 1.0}) EXPECT_NEAR(shifted_value(flat, 100.0, p), 100.0 / 1.04, 1e-12);
  const RatePath shifted{1.0, 0.04, 0.02, 1};
  EXPECT_NEAR(shifted_value(shifted, 100.0, 1.0), 100.0 / 1.04, 1e-12);
  const double expected = 0.3 * 100.0 / 1.06 + 0.7 * 100.0 / 1.04;
  EXPECT_NEAR(shifted_value(shifted, 100.0, 0.7), expected, 1e-12);
  EXPECT_NEAR(shifted_value(shifted, 100.0, 0.7), 95.6096, 5e-5);
}

TEST(bond, expected_value) {
  EXPECT_NEAR(expected_value({1.0, 0.0, 1.0, 0.146}), 0.146, 1e-15);
  EXPECT_DOUBLE_EQ(expected_value({1.0, 0.25, 3.0, 0.0}), 0.25);
  EXPECT_DOUBLE_EQ(expected_value({1.0, 0.0, 2.0, 0.5}), 1.0);
}

TEST(bond, expected_value_monotone_in_p) {
  double previous = -1.0;
  for (int i = 0; i <= 100; ++i) {
    const double v = expected_value({1.0, 0.3, 1.7, i / 100.0});
    EXPECT_GE(v, previous);
    previous = v;
  }
}

TEST(bond, rejects_invalid_inputs) {
  EXPECT_THROW(expected_value({1.0, 0.0, 1.0, 1.5}), DomainError);
  EXPECT_THROW(expected_value({1.0, 2.0, 1.0, 0.5}), DomainError);
  EXPECT_THROW(future_value({1.0, -1.0, 0.0, 1}), DomainError);
  EXPECT_THROW(future_value({1.0, 0.0, 0.0, -1}), DomainError);
  EXPECT_THROW(shifted_value({1.0, 0.0, -1.0, 1}, 1.0, 0.5), DomainError);
  EXPECT_THROW(shifted_value({1.0, 0.0, 0.0, 1}, 1.0, -0.1), DomainError);
}
