// core/src/fir.cc

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

#include "coral/fir.h"

#include <algorithm>

#include "coral/error.h"
#include "coral/fft.h"

namespace coral {

void FirFilter::check_valid() const {
  CORAL_REQUIRE(taps.rows() > 0 && taps.cols() > 0, "fir: empty taps");
  CORAL_REQUIRE(taps.allFinite(), "fir: taps must be finite");
  CORAL_REQUIRE(declared_delay >= 0 && declared_delay <= order(),
                "fir: declared_delay must satisfy 0 <= alpha <= K");
}

namespace {

Eigen::VectorXd convolve_direct(const Eigen::VectorXd& x,
                                const Eigen::VectorXd& h) {
  Eigen::VectorXd y = Eigen::VectorXd::Zero(x.size() + h.size() - 1);
  for (Eigen::Index k = 0; k < h.size(); ++k)
    if (h[k] != 0.0) y.segment(k, x.size()) += h[k] * x;
  return y;
}

}  // namespace

Eigen::VectorXd convolve_full(const Eigen::VectorXd& x,
                              const Eigen::VectorXd& h) {
  CORAL_REQUIRE(x.size() > 0 && h.size() > 0, "convolve: empty input");
  const Eigen::Index lx = x.size(), lh = h.size();
  // Direct form wins for short kernels or tiny inputs.
  if (std::min(lx, lh) <= 64 || lx * lh <= (1 << 18))
    return lh <= lx ? convolve_direct(x, h) : convolve_direct(h, x);

  const Eigen::VectorXd& kern = lh <= lx ? h : x;
  const Eigen::VectorXd& sig = lh <= lx ? x : h;
  const Eigen::Index lk = kern.size();

  const int nfft = next_pow2(static_cast<int>(
      std::max<Eigen::Index>(2 * lk, std::min<Eigen::Index>(sig.size() + lk - 1, 1 << 15))));
  const Eigen::Index step = nfft - lk + 1;

  Fft fft;
  Eigen::VectorXd padded_kernel = Eigen::VectorXd::Zero(nfft);
  padded_kernel.head(lk) = kern;
  Eigen::VectorXcd kernel_spec;
  fft.forward_real(padded_kernel, &kernel_spec);

  Eigen::VectorXd y = Eigen::VectorXd::Zero(sig.size() + lk - 1);
  Eigen::VectorXd block = Eigen::VectorXd::Zero(nfft);
  Eigen::VectorXcd spec;
  Eigen::VectorXd seg;
  for (Eigen::Index start = 0; start < sig.size(); start += step) {
    const Eigen::Index n = std::min<Eigen::Index>(step, sig.size() - start);
    block.setZero();
    block.head(n) = sig.segment(start, n);
    fft.forward_real(block, &spec);
    spec.array() *= kernel_spec.array();
    fft.inverse_real(spec, nfft, &seg);
    const Eigen::Index keep =
        std::min<Eigen::Index>(n + lk - 1, y.size() - start);
    y.segment(start, keep) += seg.head(keep);
  }
  return y;
}

Eigen::VectorXd fir_apply(const FirFilter& filter,
                          const MultichannelSignal& signal) {
  filter.check_valid();
  CORAL_REQUIRE(filter.channels() == signal.channels(),
                "fir_apply: filter has " + std::to_string(filter.channels()) +
                    " channels but signal has " +
                    std::to_string(signal.channels()));
  const Eigen::Index len = signal.length();
  Eigen::VectorXd y = Eigen::VectorXd::Zero(len);
  if (len == 0) return y;
  for (int c = 0; c < filter.channels(); ++c) {
    const Eigen::VectorXd full =
        convolve_full(signal.samples.row(c).transpose(),
                      filter.taps.row(c).transpose());
    y += full.head(len);
  }
  return y;
}

}  // namespace coral
