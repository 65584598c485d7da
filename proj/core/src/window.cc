// core/src/window.cc

// Copyright 2026  The Coral Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "coral/window.h"

#include <cmath>

#include "coral/error.h"

namespace coral {

Eigen::VectorXd hann_window(int len) {
  CORAL_REQUIRE(len > 0, "window: length must be positive");
  Eigen::VectorXd w(len);
  const double step = 2.0 * M_PI / len;
  for (int n = 0; n < len; ++n) w[n] = 0.5 * (1.0 - std::cos(step * n));
  return w;
}

Eigen::VectorXd sqrt_hann_window(int len) {
  return hann_window(len).cwiseSqrt();
}

double cola_deviation(const Eigen::VectorXd& analysis,
                      const Eigen::VectorXd& synthesis, int hop) {
  CORAL_REQUIRE(analysis.size() == synthesis.size(),
                "window: analysis/synthesis length mismatch");
  const int len = static_cast<int>(analysis.size());
  CORAL_REQUIRE(hop > 0 && hop <= len, "window: hop must be in (0, len]");

  // Accumulate the product window over enough shifts that every point of one
  // hop period is fully overlapped, then measure flatness there.
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(hop);
  for (int shift = 0; shift < len; shift += hop) {
    for (int n = 0; n < hop; ++n) {
      const int idx = shift + n;
      if (idx < len) acc[n] += analysis[idx] * synthesis[idx];
    }
  }
  const double mean = acc.mean();
  if (mean <= 0.0) return 1.0;
  return (acc.array() - mean).abs().maxCoeff() / mean;
}

}  // namespace coral
