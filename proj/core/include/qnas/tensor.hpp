// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qnas {

// Dense row-major tensor of doubles. Feature maps use [N][C][H][W], conv
// weights [Cout][Cin][K][K], depthwise weights [C][1][K][K], dense weights
// [Out][In].
struct Tensor {
  std::vector<int> shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> s) : shape(std::move(s)) {
    data.assign(numel_of(shape), 0.0);
  }
  Tensor(std::initializer_list<int> s) : Tensor(std::vector<int>(s)) {}

  static std::size_t numel_of(const std::vector<int>& s) {
    std::size_t n = 1;
    for (int d : s) {
      if (d <= 0) throw std::invalid_argument("tensor dims must be positive");
      n *= static_cast<std::size_t>(d);
    }
    return n;
  }

  std::size_t numel() const { return data.size(); }
  bool empty() const { return data.empty(); }
  int rank() const { return static_cast<int>(shape.size()); }

  int dim(int i) const { return shape.at(static_cast<std::size_t>(i)); }

  // [N][C][H][W] addressing.
  std::size_t idx4(int n, int c, int h, int w) const {
    return ((static_cast<std::size_t>(n) * shape[1] + c) * shape[2] + h) *
               shape[3] +
           w;
  }
  double& at4(int n, int c, int h, int w) { return data[idx4(n, c, h, w)]; }
  double at4(int n, int c, int h, int w) const {
    return data[idx4(n, c, h, w)];
  }

  std::size_t idx2(int r, int c) const {
    return static_cast<std::size_t>(r) * shape[1] + c;
  }
  double& at2(int r, int c) { return data[idx2(r, c)]; }
  double at2(int r, int c) const { return data[idx2(r, c)]; }

  void fill(double v) { data.assign(data.size(), v); }

  std::string shape_str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (i) s += "x";
      s += std::to_string(shape[i]);
    }
    return s + "]";
  }
};

inline bool same_shape(const Tensor& a, const Tensor& b) {
  return a.shape == b.shape;
}

}  // namespace qnas
