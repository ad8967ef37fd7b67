#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tofe {

// Grayscale raster plus a diffusion timestep tag. Pixel values are
// nominally in [-1, 1] once normalized; corruption transforms operate on a
// [0, 1] copy instead (see datagen).
struct Latent {
  int height = 0;
  int width = 0;
  int timestep = 0;
  std::vector<float> data;

  Latent() = default;
  Latent(int h, int w, int t = 0)
      : height(h), width(w), timestep(t),
        data(static_cast<size_t>(h) * static_cast<size_t>(w), 0.0f) {}

  int numel() const { return height * width; }
  float& at(int y, int x) { return data[static_cast<size_t>(y) * width + x]; }
  float at(int y, int x) const {
    return data[static_cast<size_t>(y) * width + x];
  }
  bool same_shape(const Latent& other) const {
    return height == other.height && width == other.width;
  }
};

using Image = Latent;

// DDIM inversion path z_0 ... z_T; latents[t].timestep == t.
struct Trajectory {
  std::vector<Latent> latents;

  int steps() const { return static_cast<int>(latents.size()) - 1; }
  const Latent& at(int t) const { return latents[static_cast<size_t>(t)]; }
};

void require_same_shape(const Latent& a, const Latent& b, const char* what);
void require_same_size(size_t a, size_t b, const char* what);
bool all_finite(const std::vector<float>& values);

}  // namespace tofe
