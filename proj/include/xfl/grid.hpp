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

#ifndef XFL_GRID_HPP_
#define XFL_GRID_HPP_

#include <cassert>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace xfl {

using cplx = std::complex<double>;

/// Dense row-major 2D array. 1D signals are plain std::vector; a Grid with
/// rows()==1 is used where an operation is shared between 1D and 2D.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
    assert(rows >= 0 && cols >= 0);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  T& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  std::span<T> row(int r) { return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)}; }
  std::span<const T> row(int r) const {
    return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
  }

  bool same_shape(const Grid& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using RealImage = Grid<double>;
using ComplexImage = Grid<cplx>;

inline double sq(double x) { return x * x; }

inline double norm_l2(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

inline double norm_l2(const std::vector<cplx>& v) {
  double s = 0;
  for (const cplx& x : v) s += std::norm(x);
  return std::sqrt(s);
}

template <typename T>
double norm_l2(const Grid<T>& g) {
  double s = 0;
  for (size_t i = 0; i < g.size(); ++i) s += std::norm(cplx(g.data()[i]));
  return std::sqrt(s);
}

inline double rmse(const RealImage& a, const RealImage& b) {
  assert(a.same_shape(b));
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += sq(a.data()[i] - b.data()[i]);
  return std::sqrt(s / static_cast<double>(a.size()));
}

inline bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace xfl

#endif  // XFL_GRID_HPP_
