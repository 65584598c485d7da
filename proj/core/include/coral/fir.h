// core/include/coral/fir.h

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

#include "coral/signal.h"

namespace coral {

// Causal order-K FIR over M channels: y[t] = sum_k taps[:,k]' * x[t-k].
// declared_delay is the latency alpha the filter was designed for; it is
// carried as metadata and must satisfy 0 <= alpha <= K.
struct FirFilter {
  Eigen::MatrixXd taps;  // channels x (K+1)
  int declared_delay = 0;

  int channels() const { return static_cast<int>(taps.rows()); }
  int order() const { return static_cast<int>(taps.cols()) - 1; }
  void check_valid() const;
};

// Causal convolve-and-sum; output has the input's length (tail truncated).
Eigen::VectorXd fir_apply(const FirFilter& filter,
                          const MultichannelSignal& signal);

// Full linear convolution, length x.size() + h.size() - 1. Overlap-add FFT
// for long kernels, direct form for short ones; both exact to rounding.
Eigen::VectorXd convolve_full(const Eigen::VectorXd& x,
                              const Eigen::VectorXd& h);

}  // namespace coral
