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

#ifndef XFL_REFERENCE_HPP_
#define XFL_REFERENCE_HPP_

#include <span>
#include <vector>

#include "xfl/transforms.hpp"

namespace xfl::ref {

// Serial direct-summation implementations of every transform, written from
// the kernel definitions with no shared code with the fast paths. They are
// the correctness oracle for the fast implementations and the baseline for
// the benchmark target. O(N^2) per 1D transform (O(N^4) for the rotated 2D
// kernel); use only at test scale.

std::vector<cplx> dft_1d(std::span<const cplx> x, Direction dir);
std::vector<cplx> sdft_1d(std::span<const cplx> x, const ShiftScaleParams& p, Direction dir);
std::vector<cplx> shsc_dft_1d(std::span<const cplx> x, const ShiftScaleParams& p, Direction dir);
ComplexImage shscr_dft_2d(const ComplexImage& img, const RotParams& p, Direction dir);
std::vector<double> dct_1d(std::span<const double> x, Direction dir);
std::vector<double> hadamard_1d(std::span<const double> x, Direction dir);
std::vector<double> walsh_1d(std::span<const double> x, Direction dir);
std::vector<double> haar_1d(std::span<const double> x, Direction dir);

/// Explicit orthonormal Haar matrix; row k for k=2^p+q is supported on
/// [q*N/2^p, (q+1)*N/2^p) with values +-sqrt(2^p/N), row 0 is 1/sqrt(N).
std::vector<std::vector<double>> haar_matrix(int n);

}  // namespace xfl::ref

#endif  // XFL_REFERENCE_HPP_
