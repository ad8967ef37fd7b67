#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "tofe/classifier.hpp"
#include "tofe/denoiser.hpp"
#include "tofe/extraction.hpp"
#include "tofe/tensor.hpp"

namespace tofe {

// All multi-byte values little-endian. Each format is versioned by magic +
// u16 version; readers reject bad magic, unsupported versions, truncation,
// and (where a checksum is stored) payload corruption as distinct errors.
//
//   TIMG  image:      "TIMG" u16 height u16 width, f32 pixels
//   TDNZ  denoiser:   "TDNZ" u16 version, topology header, f32 weights
//   TMLP  classifier: "TMLP" u16 version, dims, f32 stats + weights
//   TFEA  features:   "TFEA" u16 version u32 count u16 steps u16 cond_dim
//                     u16 flags u16 height u16 width, records, u64 fnv1a
//   record: u16-len source_id, u8 label, u16-len generator tag,
//           z_T f32 payload, embeddings f32 (steps x cond_dim),
//           final losses f32 (steps)

uint64_t fnv1a64(const void* data, size_t n);
uint64_t hash_file(const std::filesystem::path& path);

// Write-to-temp-then-rename so readers never observe a partial file.
void atomic_write_file(const std::filesystem::path& path,
                       const std::string& bytes);

void write_image(const std::filesystem::path& path, const Image& image);
Image read_image(const std::filesystem::path& path);

void write_denoiser(const std::filesystem::path& path,
                    const DenoiserParams& params);
DenoiserParams read_denoiser(const std::filesystem::path& path);

void write_mlp(const std::filesystem::path& path, const MlpModel& model);
MlpModel read_mlp(const std::filesystem::path& path);

// Returns the content hash recorded in manifests. All features must share
// steps, cond_dim, and latent shape.
uint64_t write_feature_file(const std::filesystem::path& path,
                            const std::vector<TofeFeature>& features);
std::vector<TofeFeature> read_feature_file(const std::filesystem::path& path);

}  // namespace tofe
