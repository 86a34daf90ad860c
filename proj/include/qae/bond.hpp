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

#pragma once

namespace qae::bond {

/// Single-period binomial T-Bill: the face value moves to `v_high` with
/// probability `p_no_change` and to `v_low` otherwise.
struct TBill {
  double face_value = 1.0;
  double v_low = 0.0;
  double v_high = 1.0;
  double p_no_change = 0.5;
};

/// Principal compounded at `rate` per period, optionally perturbed by `shift`.
struct RatePath {
  double principal = 1.0;
  double rate = 0.0;
  double shift = 0.0;
  int periods = 1;
};

/// Throws DomainError unless 0 <= p <= 1 and v_low <= v_high.
void validate(const TBill& tb);

/// Throws DomainError unless 1 + rate > 0 and 1 + rate + shift > 0.
void validate(const RatePath& rp);

/// principal * (1 + rate)^periods.
double future_value(const RatePath& rp);

/// Discounted value of `face` when the rate stays at `rate` with probability
/// p and moves to rate + shift otherwise.
double shifted_value(const RatePath& rp, double face, double p);

/// (1 - p) * v_low + p * v_high.
double expected_value(const TBill& tb);

}  // namespace qae::bond
