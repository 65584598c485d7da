// core/include/coral/signal.h

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
#include <vector>

namespace coral {

// Time-domain sample block, channels x samples. Immutable by convention once
// filled; operations return new signals.
struct MultichannelSignal {
  Eigen::MatrixXd samples;  // channels x length
  int sample_rate = 0;

  MultichannelSignal() = default;
  MultichannelSignal(Eigen::MatrixXd s, int fs)
      : samples(std::move(s)), sample_rate(fs) {}

  int channels() const { return static_cast<int>(samples.rows()); }
  Eigen::Index length() const { return samples.cols(); }
  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(length()) / sample_rate : 0.0;
  }

  static MultichannelSignal zeros(int channels, Eigen::Index length, int fs);
  static MultichannelSignal from_mono(const Eigen::VectorXd& x, int fs);

  // Copy of samples [start, start+len); clamped against the signal bounds.
  MultichannelSignal segment(Eigen::Index start, Eigen::Index len) const;
  MultichannelSignal channel_subset(const std::vector<int>& channels) const;

  // Throws unless sample rate is positive and every sample is finite.
  void check_valid(const char* what = "signal") const;
};

double rms(const Eigen::VectorXd& x);
double rms(const MultichannelSignal& s);

// out[t] = in[t - delay], zero head, same length.
Eigen::VectorXd delay_signal(const Eigen::VectorXd& x, Eigen::Index delay);

}  // namespace coral
