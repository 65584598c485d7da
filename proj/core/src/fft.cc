// core/src/fft.cc

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

#include "coral/fft.h"

#include <unsupported/Eigen/FFT>

#include "coral/error.h"

namespace coral {

struct Fft::Impl {
  // HalfSpectrum keeps real transforms one-sided (n/2+1 bins).
  Eigen::FFT<double> fft{Eigen::default_fft_impl<double>(),
                         Eigen::FFT<double>::HalfSpectrum};
};

Fft::Fft() : impl_(new Impl) {}
Fft::~Fft() { delete impl_; }

void Fft::forward_real(const Eigen::VectorXd& x, Eigen::VectorXcd* spectrum) {
  const int n = static_cast<int>(x.size());
  CORAL_REQUIRE(n > 0 && n % 2 == 0, "fft: real transform length must be even and positive");
  spectrum->resize(n / 2 + 1);
  impl_->fft.fwd(spectrum->data(), x.data(), n);
}

void Fft::inverse_real(const Eigen::VectorXcd& spectrum, int n,
                       Eigen::VectorXd* x) {
  CORAL_REQUIRE(n > 0 && n % 2 == 0, "fft: real transform length must be even and positive");
  CORAL_REQUIRE(spectrum.size() == n / 2 + 1,
                "fft: one-sided spectrum must have n/2+1 bins");
  x->resize(n);
  impl_->fft.inv(x->data(), spectrum.data(), n);
}

void Fft::forward(const Eigen::VectorXcd& in, Eigen::VectorXcd* out) {
  const int n = static_cast<int>(in.size());
  CORAL_REQUIRE(n > 0, "fft: empty input");
  out->resize(n);
  impl_->fft.fwd(out->data(), in.data(), n);
}

void Fft::inverse(const Eigen::VectorXcd& in, Eigen::VectorXcd* out) {
  const int n = static_cast<int>(in.size());
  CORAL_REQUIRE(n > 0, "fft: empty input");
  out->resize(n);
  impl_->fft.inv(out->data(), in.data(), n);
}

}  // namespace coral
