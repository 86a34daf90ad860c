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

#include <cmath>

#include "qae/error.hpp"

namespace qae::bond {
namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("probability must lie in [0, 1]");
  }
}

}  // namespace

void validate(const TBill& tb) {
  check_probability(tb.p_no_change);
  if (!(tb.v_low <= tb.v_high)) throw DomainError("v_low must not exceed v_high");
}

void validate(const RatePath& rp) {
  if (!(1.0 + rp.rate > 0.0)) throw DomainError("1 + rate must be positive");
  if (!(1.0 + rp.rate + rp.shift > 0.0)) {
    throw DomainError("1 + rate + shift must be positive");
  }
  if (rp.periods < 0) throw DomainError("periods must be non-negative");
}

double future_value(const RatePath& rp) {
  validate(rp);
  return rp.principal * std::pow(1.0 + rp.rate, rp.periods);
}

double shifted_value(const RatePath& rp, double face, double p) {
  validate(rp);
  check_probability(p);
  return (1.0 - p) * face / (1.0 + rp.rate + rp.shift) +
         p * face / (1.0 + rp.rate);
}

double expected_value(const TBill& tb) {
  validate(tb);
  return (1.0 - tb.p_no_change) * tb.v_low + tb.p_no_change * tb.v_high;
}

}  // namespace qae::bond
