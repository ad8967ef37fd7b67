#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tofe/tensor.hpp"

namespace tofe {

struct PointCloud {
  size_t n = 0;
  size_t dim = 0;
  std::vector<double> data;  // row-major n x dim

  PointCloud() = default;
  PointCloud(size_t n_, size_t dim_)
      : n(n_), dim(dim_), data(n_ * dim_, 0.0) {}
  double& at(size_t i, size_t j) { return data[i * dim + j]; }
  double at(size_t i, size_t j) const { return data[i * dim + j]; }
};

// Kernel two-sample distance: square root of the biased V-statistic with an
// RBF kernel. No bandwidth -> median heuristic over the pooled cloud.
double mmd_rbf(const PointCloud& x, const PointCloud& y,
               std::optional<double> bandwidth = std::nullopt);

// Jensen-Shannon divergence of two 2-D clouds histogrammed on a shared
// bins x bins grid over the joint bounding box (expanded 1%), natural log.
double js_divergence_2d(const PointCloud& x, const PointCloud& y, int bins);

// Exact O(n^2) t-SNE to 2-D. Perplexity is matched per point by bisection;
// plain momentum gradient descent with early exaggeration. Deterministic
// for a fixed seed. If kl_log is given, the KL objective (without the
// exaggeration factor) is appended once per iteration.
PointCloud tsne(const PointCloud& x, double perplexity, int iters,
                uint32_t seed, std::vector<double>* kl_log = nullptr);

// Peak signal-to-noise ratio in dB for [0, 1]-scaled images (L = 1).
// Identical images return +infinity.
double psnr(const Image& a, const Image& b);

// Mean local structural similarity over 8x8 sliding windows, stride 1,
// L = 1.
double ssim(const Image& a, const Image& b);

struct AccAp {
  double acc = 0.0;
  double ap = 0.0;
};

// Threshold accuracy plus average precision (precision averaged over
// positive ranks; stable descending sort on score, then original index).
AccAp accuracy_ap(const std::vector<double>& scores,
                  const std::vector<int>& labels, double threshold);

}  // namespace tofe
