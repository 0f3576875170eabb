#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "tensor.hpp"

namespace inkdrop {

struct LabeledSample {
  ImageTensor image;
  int label = 0;
  std::int64_t id = 0;
};

struct LabeledDataset {
  std::vector<LabeledSample> samples;
  int class_count = 0;
  std::string name;

  int size() const { return static_cast<int>(samples.size()); }
  std::vector<int> class_indices(int c) const;          // indices into samples
  std::vector<LabeledSample> class_slice(int c) const;  // copies
  void validate() const;
};

enum class DatasetFormat {
  directory_of_images,  // <root>/<class_index>/<image files>, netpbm P5/P6
  packed_binary,        // "IDRP" header, float32 pixels, u32 labels
};

LabeledDataset load_dataset(const std::filesystem::path& path, DatasetFormat format);

// Packed-binary layout: little-endian magic "IDRP", u32 C, u32 N,
// u32 c, u32 h, u32 w, float32 pixels (N*c*h*w), u32 labels (N).
void save_packed(const LabeledDataset& d, const std::filesystem::path& path);

// Writes <root>/<class_index>/<id>.pgm (or .ppm for 3 channels), 8-bit.
void save_directory(const LabeledDataset& d, const std::filesystem::path& root);

// Stratified per class, disjoint, union equals input, deterministic under seed.
std::pair<LabeledDataset, LabeledDataset> split_dataset(const LabeledDataset& d, double train_fraction,
                                                        std::uint64_t seed);

// Bundled synthetic-shapes corpus: up to 10 grayscale shape classes with
// position/size/intensity jitter and additive pixel noise.
LabeledDataset make_shapes_dataset(int classes, int per_class, int image_size, double noise, std::uint64_t seed);

}  // namespace inkdrop
