// core/include/coral/window.h

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

#pragma once

#include <Eigen/Dense>

namespace coral {

// Periodic Hann, w[n] = 0.5 * (1 - cos(2*pi*n/len)).
Eigen::VectorXd hann_window(int len);

// Square root of the periodic Hann. Used as both analysis and synthesis
// window; the pair is constant-overlap-add at hop = len/2.
Eigen::VectorXd sqrt_hann_window(int len);

// Max deviation of sum_m analysis[n - m*hop] * synthesis[n - m*hop] from its
// mean over one hop period (the overlap-add normalization profile).
// Zero (to rounding) means the pair reconstructs with a constant gain.
double cola_deviation(const Eigen::VectorXd& analysis,
                      const Eigen::VectorXd& synthesis, int hop);

}  // namespace coral
