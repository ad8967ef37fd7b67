#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "tofe/denoiser.hpp"
#include "tofe/tensor.hpp"

namespace tofe {

// One toy diffusion generator: its own trained weights (model_seed) plus a
// sampler configuration. The grid of specs stands in for a zoo of
// generation methods.
struct GeneratorSpec {
  enum class Kind : uint8_t { ddim_sampler = 0, ddpm_ancestral = 1 };

  std::string id;
  Kind kind = Kind::ddim_sampler;
  int steps = 50;
  float guidance_w = 7.5f;
  uint32_t model_seed = 0;
  uint32_t sampler_seed_base = 0;
};

const char* generator_kind_name(GeneratorSpec::Kind kind);
GeneratorSpec::Kind generator_kind_from_name(const std::string& name);

// Ten generators spanning both sampler kinds, step counts {10, 20, 50},
// guidance weights {1, 3, 7.5}, and distinct model seeds.
std::vector<GeneratorSpec> default_generator_grid();

// Procedural "real" family: anti-aliased ellipses, rectangles, and stripe
// patterns with smooth shading, normalized to [-1, 1]. Deterministic in
// the seed.
std::vector<Image> sample_real(uint32_t seed, int n);

struct CorruptionSpec {
  enum class Kind : uint8_t {
    gaussian_noise = 0,
    gaussian_blur = 1,
    crop_resize = 2,
    jpeg_like = 3,
  };
  Kind kind = Kind::gaussian_noise;
  int severity = 0;  // 0..5; 0 is the identity
};

const char* corruption_kind_name(CorruptionSpec::Kind kind);
CorruptionSpec::Kind corruption_kind_from_name(const std::string& name);

// Applies one corruption to an image in the [0, 1] domain; output stays in
// [0, 1] and keeps the shape. Severity 0 returns the input bit-for-bit.
// Noise draws are seeded from the image content, so the op is a pure
// function of (image, spec).
Image corrupt(const Image& image, const CorruptionSpec& spec);

struct ManifestItem {
  std::string id;
  uint8_t label = 0;  // 0 real, 1 fake
  std::string generator;
  std::string split;  // "train" | "test"
  std::string path;   // relative to the manifest directory
  uint64_t file_hash = 0;
};

struct DatasetManifest {
  int image_height = 0;
  int image_width = 0;
  std::string normalization = "[-1,1]";
  std::vector<GeneratorSpec> generators;
  std::vector<std::string> train_generators;
  std::vector<ManifestItem> items;
  uint64_t content_hash = 0;

  bool is_train_generator(const std::string& id) const;
  std::vector<const ManifestItem*> select(const std::string& generator,
                                          const std::string& split,
                                          int label) const;
};

struct DatasetBuildConfig {
  std::filesystem::path output_dir;
  int train_per_generator = 500;  // fakes (and paired reals) per train type
  int test_per_generator = 200;
  int train_generator_count = 3;
  uint32_t real_seed = 1234;
};

// Samples fakes from every generator's trained model, draws fresh paired
// reals per (generator, split), writes everything under output_dir, and
// returns the manifest (also written as manifest.json).
DatasetManifest build_dataset(const std::vector<GeneratorSpec>& specs,
                              const DatasetBuildConfig& cfg,
                              const std::map<std::string, DenoiserParams>& models,
                              const NoiseSchedule& sched, int jobs = 0);

void save_manifest(const DatasetManifest& manifest,
                   const std::filesystem::path& path);
// Loads and verifies: every listed file must exist and match its hash.
DatasetManifest load_manifest(const std::filesystem::path& path);

}  // namespace tofe
