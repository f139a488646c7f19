// Copyright 2026 The qsc developers
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

#include <algorithm>

#include "qsc/error.hpp"

namespace qsc {

enum class ScaleMode {
  absolute,            ///< threshold is eps, regardless of operand size
  frobenius_relative,  ///< threshold is eps * max(1, scale)
};

/// Repo-wide tolerance policy. Every comparison against "numerically zero"
/// goes through threshold(), where `scale` is a Frobenius-norm-like measure
/// of the operands (often a product of norms).
struct Tolerance {
  double eps = 1e-9;
  ScaleMode mode = ScaleMode::frobenius_relative;

  Tolerance() = default;
  explicit Tolerance(double e, ScaleMode m = ScaleMode::frobenius_relative)
      : eps(e), mode(m) {
    if (!(eps > 0.0)) throw InvariantViolation("Tolerance: eps must be > 0");
  }

  static Tolerance absolute(double e) { return Tolerance(e, ScaleMode::absolute); }

  double threshold(double scale) const {
    return mode == ScaleMode::absolute ? eps : eps * std::max(1.0, scale);
  }
};

}  // namespace qsc
