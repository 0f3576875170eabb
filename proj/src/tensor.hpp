#pragma once

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace inkdrop {

// One image as channels x height x width doubles in [0,1].
struct ImageTensor {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::vector<double> pixels;  // channel-major, row-major within a channel

  ImageTensor() = default;
  ImageTensor(int c, int h, int w, double fill = 0.0)
      : channels(c), height(h), width(w), pixels(static_cast<std::size_t>(c) * h * w, fill) {
    if (c <= 0 || h <= 0 || w <= 0) fail(ErrorKind::invalid_argument, "ImageTensor: dimensions must be positive");
  }

  int size() const { return channels * height * width; }

  double& at(int c, int y, int x) { return pixels[(static_cast<std::size_t>(c) * height + y) * width + x]; }
  double at(int c, int y, int x) const { return pixels[(static_cast<std::size_t>(c) * height + y) * width + x]; }

  bool same_shape(const ImageTensor& o) const {
    return channels == o.channels && height == o.height && width == o.width;
  }

  void validate() const;
};

// Length-C nonnegative vector summing to 1.
struct SimplexDistribution {
  std::vector<double> probs;

  int size() const { return static_cast<int>(probs.size()); }
  void validate(double tol = 1e-9) const;
  int argmax() const;  // ties broken by lowest index
};

// Scales a nonnegative vector to sum 1. All-zero input is an error.
SimplexDistribution normalize_simplex(const std::vector<double>& v);

ImageTensor clamp01(const ImageTensor& t);

// clamp(x + delta, 0, 1)
ImageTensor add_clamped(const ImageTensor& x, const ImageTensor& delta);

// max(1, floor(frac * n)), with a tiny epsilon so exact products like
// 0.3 * 10 do not floor to 2.
int fraction_count(double frac, int n);

}  // namespace inkdrop
