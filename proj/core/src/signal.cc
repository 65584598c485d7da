// core/src/signal.cc

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

#include "coral/signal.h"

#include <algorithm>
#include <string>

#include "coral/error.h"

namespace coral {

MultichannelSignal MultichannelSignal::zeros(int channels, Eigen::Index length,
                                             int fs) {
  CORAL_REQUIRE(channels > 0, "signal: channel count must be positive");
  CORAL_REQUIRE(length >= 0, "signal: length must be nonnegative");
  return {Eigen::MatrixXd::Zero(channels, length), fs};
}

MultichannelSignal MultichannelSignal::from_mono(const Eigen::VectorXd& x,
                                                 int fs) {
  return {x.transpose(), fs};
}

MultichannelSignal MultichannelSignal::segment(Eigen::Index start,
                                               Eigen::Index len) const {
  const Eigen::Index b = std::clamp<Eigen::Index>(start, 0, length());
  const Eigen::Index e = std::clamp<Eigen::Index>(start + len, b, length());
  return {samples.middleCols(b, e - b), sample_rate};
}

MultichannelSignal MultichannelSignal::channel_subset(
    const std::vector<int>& chans) const {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(chans.size()), length());
  for (std::size_t i = 0; i < chans.size(); ++i) {
    CORAL_REQUIRE(chans[i] >= 0 && chans[i] < channels(),
                  "signal: channel index out of range");
    out.row(static_cast<Eigen::Index>(i)) = samples.row(chans[i]);
  }
  return {std::move(out), sample_rate};
}

void MultichannelSignal::check_valid(const char* what) const {
  CORAL_REQUIRE(sample_rate > 0,
                std::string(what) + ": sample rate must be positive");
  CORAL_REQUIRE(samples.allFinite(),
                std::string(what) + ": samples must be finite");
}

double rms(const Eigen::VectorXd& x) {
  if (x.size() == 0) return 0.0;
  return std::sqrt(x.squaredNorm() / static_cast<double>(x.size()));
}

double rms(const MultichannelSignal& s) {
  if (s.samples.size() == 0) return 0.0;
  return std::sqrt(s.samples.squaredNorm() /
                   static_cast<double>(s.samples.size()));
}

Eigen::VectorXd delay_signal(const Eigen::VectorXd& x, Eigen::Index delay) {
  CORAL_REQUIRE(delay >= 0, "delay_signal: delay must be nonnegative");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(x.size());
  if (delay < x.size()) out.tail(x.size() - delay) = x.head(x.size() - delay);
  return out;
}

}  // namespace coral
