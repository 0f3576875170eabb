#include "tensor.hpp"

#include <algorithm>
#include <cmath>

namespace inkdrop {

void ImageTensor::validate() const {
  if (channels <= 0 || height <= 0 || width <= 0)
    fail(ErrorKind::invalid_argument, "ImageTensor: dimensions must be positive");
  if (pixels.size() != static_cast<std::size_t>(size()))
    fail(ErrorKind::invalid_argument, "ImageTensor: pixel count does not match dimensions");
  for (double v : pixels) {
    if (!(v >= 0.0 && v <= 1.0)) fail(ErrorKind::invalid_argument, "ImageTensor: pixel outside [0,1]");
  }
}

void SimplexDistribution::validate(double tol) const {
  if (probs.empty()) fail(ErrorKind::invalid_argument, "SimplexDistribution: empty");
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) fail(ErrorKind::invalid_argument, "SimplexDistribution: negative entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol) fail(ErrorKind::invalid_argument, "SimplexDistribution: entries do not sum to 1");
}

int SimplexDistribution::argmax() const {
  int best = 0;
  for (int i = 1; i < size(); ++i) {
    if (probs[i] > probs[best]) best = i;
  }
  return best;
}

SimplexDistribution normalize_simplex(const std::vector<double>& v) {
  if (v.empty()) fail(ErrorKind::invalid_argument, "normalize_simplex: empty vector");
  double sum = 0.0;
  for (double x : v) {
    if (!(x >= 0.0)) fail(ErrorKind::invalid_argument, "normalize_simplex: negative entry");
    sum += x;
  }
  if (sum <= 0.0) fail(ErrorKind::invalid_argument, "normalize_simplex: all-zero vector");
  SimplexDistribution out;
  out.probs.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.probs[i] = v[i] / sum;
  return out;
}

ImageTensor clamp01(const ImageTensor& t) {
  ImageTensor out = t;
  for (double& v : out.pixels) v = std::clamp(v, 0.0, 1.0);
  return out;
}

ImageTensor add_clamped(const ImageTensor& x, const ImageTensor& delta) {
  if (!x.same_shape(delta)) fail(ErrorKind::invalid_argument, "add_clamped: shape mismatch");
  ImageTensor out = x;
  for (std::size_t i = 0; i < out.pixels.size(); ++i) out.pixels[i] = std::clamp(x.pixels[i] + delta.pixels[i], 0.0, 1.0);
  return out;
}

int fraction_count(double frac, int n) {
  int k = static_cast<int>(std::floor(frac * n + 1e-9));
  return std::max(1, k);
}

}  // namespace inkdrop
