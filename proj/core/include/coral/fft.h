// core/include/coral/fft.h

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
#include <complex>

namespace coral {

// Thin real/complex FFT front end. Instances cache plans per length and are
// not safe to share across threads; make one per worker.
class Fft {
 public:
  Fft();
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  // Real n-point transform, one-sided output of n/2+1 bins. n must be even.
  void forward_real(const Eigen::VectorXd& x, Eigen::VectorXcd* spectrum);

  // Inverse of forward_real: one-sided spectrum of n/2+1 bins back to n real
  // samples. Includes the 1/n scaling, so inverse(forward(x)) == x.
  void inverse_real(const Eigen::VectorXcd& spectrum, int n,
                    Eigen::VectorXd* x);

  void forward(const Eigen::VectorXcd& in, Eigen::VectorXcd* out);
  void inverse(const Eigen::VectorXcd& in, Eigen::VectorXcd* out);

 private:
  struct Impl;
  Impl* impl_;
};

inline int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace coral
