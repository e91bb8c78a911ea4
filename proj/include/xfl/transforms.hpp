// Copyright (c) the xfl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef XFL_TRANSFORMS_HPP_
#define XFL_TRANSFORMS_HPP_

#include <span>
#include <vector>

#include "xfl/grid.hpp"

namespace xfl {

enum class Direction { Forward, Inverse };

enum class Transform { Dft, Dct, Walsh, Hadamard, Haar };

/// Shift/scale parameters of the generalized DFT kernel
/// exp(i*2*pi*(k+u)(r+v)/(sigma*N)). u shifts the signal-domain lattice,
/// v the spectral lattice, sigma rescales the sampling (sigma=1 is the
/// plain shifted DFT).
struct ShiftScaleParams {
  double u = 0.0;
  double v = 0.0;
  double sigma = 1.0;
};

/// Parameters of the 2D shifted, scaled and rotated DFT. (u1,v1) shift the
/// row axis in signal/spectral domain, (u2,v2) the column axis; theta is the
/// rotation angle of the spectral sampling lattice.
struct RotParams {
  double theta = 0.0;
  double u1 = 0.0, u2 = 0.0;
  double v1 = 0.0, v2 = 0.0;
  double sigma = 1.0;
};

// All transforms are unitarily normalized: a factor 1/sqrt(N) is applied in
// both directions, so forward/inverse pairs are exact mutual inverses and
// Parseval holds. The forward DFT kernel carries +i*2*pi, the inverse the
// conjugate. Power-of-two sizes take the fast path; any other size falls
// back to exact direct summation.

// ---- DFT family (complex) ----

std::vector<cplx> dft_1d(std::span<const cplx> x, Direction dir);
ComplexImage dft_2d(const ComplexImage& img, Direction dir);

/// Shifted DFT, sigma must be 1. Forward with shift u and inverse with u'
/// realizes the discrete sinc-interpolated translation by u'-u.
std::vector<cplx> sdft_1d(std::span<const cplx> x, const ShiftScaleParams& p, Direction dir);

/// Shifted scaled DFT for arbitrary sigma>0, evaluated through the
/// quadratic-phase (chirp) factorization as a fast convolution.
std::vector<cplx> shsc_dft_1d(std::span<const cplx> x, const ShiftScaleParams& p, Direction dir);

/// 2D shifted scaled rotated DFT on a square grid. theta=0 reduces to the
/// separable shifted-scaled transform.
ComplexImage shscr_dft_2d(const ComplexImage& img, const RotParams& p, Direction dir);

// ---- real transforms ----

/// Orthonormal DCT-II (forward) / DCT-III (inverse).
std::vector<double> dct_1d(std::span<const double> x, Direction dir);
RealImage dct_2d(const RealImage& img, Direction dir);

/// Hadamard transform in natural order; additions only in the butterfly
/// core. Self-inverse.
std::vector<double> hadamard_1d(std::span<const double> x, Direction dir);
RealImage hadamard_2d(const RealImage& img, Direction dir);

/// Walsh (sequency) ordering: Hadamard values permuted by the bit-reversed
/// Gray code of the output index.
std::vector<double> walsh_1d(std::span<const double> x, Direction dir);
RealImage walsh_2d(const RealImage& img, Direction dir);

/// Orthonormal Haar transform (full averaging/differencing cascade).
std::vector<double> haar_1d(std::span<const double> x, Direction dir);
RealImage haar_2d(const RealImage& img, Direction dir);

// ---- generic dispatch used by the analysis and filtering modules ----

/// Forward transform of a real image into a complex coefficient grid
/// (real transforms produce zero imaginary parts).
ComplexImage spectrum_2d(const RealImage& img, Transform t);

/// Inverse of spectrum_2d; the real part of the reconstruction.
RealImage inverse_spectrum_2d(const ComplexImage& sp, Transform t);

/// Walsh/Hadamard output index permutation: bit-reversed Gray code of r.
int walsh_permutation(int r, int n_bits);

/// In-place unnormalized FFT core, length must be a power of two.
/// sign=+1 computes sum a_k exp(+i*2*pi*kr/N), sign=-1 the conjugate.
void fft_pow2(std::vector<cplx>& a, double sign);

/// Additions-only Hadamard butterfly cascade, in place, unnormalized.
/// Templated so the no-multiplication structure is testable.
template <typename T>
void hadamard_core(std::span<T> a) {
  const size_t n = a.size();
  for (size_t len = 1; len < n; len <<= 1) {
    for (size_t i = 0; i < n; i += 2 * len) {
      for (size_t j = i; j < i + len; ++j) {
        T u = a[j];
        T v = a[j + len];
        a[j] = u + v;
        a[j + len] = u - v;
      }
    }
  }
}

}  // namespace xfl

#endif  // XFL_TRANSFORMS_HPP_
