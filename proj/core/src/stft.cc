// core/src/stft.cc

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

#include "coral/stft.h"

#include <string>

#include "coral/error.h"
#include "coral/fft.h"
#include "coral/parallel.h"
#include "coral/window.h"

namespace coral {

namespace {

void check_config(const StftConfig& cfg) {
  CORAL_REQUIRE(cfg.frame_len > 0, "stft: frame_len must be positive");
  CORAL_REQUIRE(cfg.hop > 0 && cfg.hop <= cfg.frame_len,
                "stft: hop must satisfy 0 < hop <= frame_len");
  CORAL_REQUIRE(cfg.fft_len >= cfg.frame_len,
                "stft: fft_len must be >= frame_len");
  CORAL_REQUIRE(cfg.fft_len % 2 == 0, "stft: fft_len must be even");
}

}  // namespace

Eigen::Index stft_frame_count(Eigen::Index n, const StftConfig& cfg) {
  if (n < cfg.frame_len) return 0;
  return (n - cfg.frame_len) / cfg.hop + 1;
}

StftTensor stft(const MultichannelSignal& signal, const StftConfig& cfg) {
  check_config(cfg);
  signal.check_valid("stft input");

  const Eigen::VectorXd window = sqrt_hann_window(cfg.frame_len);
  const double cola = cola_deviation(window, window, cfg.hop);
  CORAL_REQUIRE(cola < 1e-10,
                "stft: window/hop pair is not constant-overlap-add "
                "(deviation " + std::to_string(cola) + ")");

  const Eigen::Index frames = stft_frame_count(signal.length(), cfg);
  const int bins = cfg.fft_len / 2 + 1;

  StftTensor out;
  out.frame_len = cfg.frame_len;
  out.hop = cfg.hop;
  out.fft_len = cfg.fft_len;
  out.sample_rate = signal.sample_rate;
  out.analysis_window = window;
  out.coeffs.resize(signal.channels());
  for (auto& m : out.coeffs) m.resize(frames, bins);
  if (frames == 0) return out;

  parallel_for(signal.channels(), [&](std::size_t c) {
    Fft fft;
    Eigen::VectorXd frame = Eigen::VectorXd::Zero(cfg.fft_len);
    Eigen::VectorXcd spec;
    for (Eigen::Index t = 0; t < frames; ++t) {
      frame.head(cfg.frame_len) =
          signal.samples.row(c).segment(t * cfg.hop, cfg.frame_len)
              .transpose()
              .cwiseProduct(window);
      fft.forward_real(frame, &spec);
      out.coeffs[c].row(t) = spec.transpose();
    }
  });
  return out;
}

MultichannelSignal istft(const StftTensor& tensor, Eigen::Index target_len) {
  CORAL_REQUIRE(!tensor.coeffs.empty(), "istft: empty tensor");
  CORAL_REQUIRE(tensor.fft_len >= tensor.frame_len && tensor.frame_len > 0 &&
                    tensor.hop > 0 && tensor.hop <= tensor.frame_len,
                "istft: inconsistent frame metadata");
  CORAL_REQUIRE(tensor.analysis_window.size() == tensor.frame_len,
                "istft: window length does not match frame_len");
  const int bins = tensor.fft_len / 2 + 1;
  for (const auto& m : tensor.coeffs) {
    CORAL_REQUIRE(m.cols() == bins, "istft: bin count mismatch");
    CORAL_REQUIRE(m.rows() == tensor.frames(), "istft: ragged frame counts");
  }
  CORAL_REQUIRE(target_len >= 0, "istft: negative target length");

  const Eigen::Index frames = tensor.frames();
  const Eigen::VectorXd& window = tensor.analysis_window;  // synthesis = analysis
  const Eigen::Index span =
      frames > 0 ? (frames - 1) * tensor.hop + tensor.frame_len : 0;
  const Eigen::Index len = std::max<Eigen::Index>(target_len, span);

  MultichannelSignal out =
      MultichannelSignal::zeros(tensor.channels(), len,
                                tensor.sample_rate > 0 ? tensor.sample_rate : 1);
  if (frames == 0) {
    out.samples.conservativeResize(Eigen::NoChange, target_len);
    return out;
  }

  // Overlap-add normalization profile; identical for every channel.
  Eigen::VectorXd norm = Eigen::VectorXd::Zero(len);
  for (Eigen::Index t = 0; t < frames; ++t)
    norm.segment(t * tensor.hop, tensor.frame_len).array() +=
        window.array().square();

  parallel_for(tensor.channels(), [&](std::size_t c) {
    Fft fft;
    Eigen::VectorXcd spec(bins);
    Eigen::VectorXd frame;
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(len);
    for (Eigen::Index t = 0; t < frames; ++t) {
      spec = tensor.coeffs[c].row(t).transpose();
      fft.inverse_real(spec, tensor.fft_len, &frame);
      acc.segment(t * tensor.hop, tensor.frame_len) +=
          frame.head(tensor.frame_len).cwiseProduct(window);
    }
    for (Eigen::Index i = 0; i < len; ++i)
      out.samples(c, i) = norm[i] > 1e-12 ? acc[i] / norm[i] : 0.0;
  });

  out.samples.conservativeResize(Eigen::NoChange, target_len);
  if (target_len > span) {
    out.samples.rightCols(target_len - span).setZero();
  }
  out.sample_rate = tensor.sample_rate;
  return out;
}

}  // namespace coral
