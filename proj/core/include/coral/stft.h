// core/include/coral/stft.h

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

#include "coral/signal.h"

namespace coral {

struct StftConfig {
  int frame_len = 4096;
  int hop = 2048;
  int fft_len = 4096;  // >= frame_len; frames are zero-padded to fft_len
};

// One-sided complex time-frequency coefficients. coeffs[c](tau, f) is the
// windowed DFT of frame tau of channel c; bins = fft_len/2 + 1.
struct StftTensor {
  std::vector<Eigen::MatrixXcd> coeffs;  // per channel: frames x bins
  int frame_len = 0;
  int hop = 0;
  int fft_len = 0;
  int sample_rate = 0;
  Eigen::VectorXd analysis_window;

  int channels() const { return static_cast<int>(coeffs.size()); }
  Eigen::Index frames() const { return coeffs.empty() ? 0 : coeffs[0].rows(); }
  int bins() const { return fft_len / 2 + 1; }
};

// Number of full analysis frames taken from an unpadded signal of length n:
// floor((n - frame_len)/hop) + 1, or 0 when n < frame_len. Trailing partial
// samples are dropped.
Eigen::Index stft_frame_count(Eigen::Index n, const StftConfig& cfg);

// Sqrt-Hann analysis window; the identical window is used for synthesis.
// Throws if the window/hop pair is not constant-overlap-add, or on
// inconsistent frame/hop/fft lengths.
StftTensor stft(const MultichannelSignal& signal, const StftConfig& cfg);

// Weighted overlap-add inverse. Reconstructs target_len samples; the fully
// overlapped interior matches the input of stft() to ~1e-12 relative.
MultichannelSignal istft(const StftTensor& tensor, Eigen::Index target_len);

}  // namespace coral
