#pragma once

#include <string>

#include <torch/torch.h>

#include "qgvae/config.hpp"

namespace qgvae {

struct Dataset {
    torch::Tensor images;  // [N, ch, H, W] float in [-1, 1]
    std::string name;

    int64_t size() const { return images.size(0); }
};

// source: "mnist", "cifar10", or a directory of image files.
// split: "train" or "test" (ignored for directories).
// Images are normalized to [-1, 1] and fitted to the config geometry
// (MNIST is zero-padded from 28 to 32 pixels).
Dataset load_dataset(const std::string& source, const std::string& split,
                     const ModelConfig& cfg, const std::string& data_root);

// Resolves the dataset root: explicit flag, then QGVAE_DATA_DIR, then ".".
std::string resolve_data_root(const std::string& flag_value);

// Image file <-> normalized tensor helpers (OpenCV-backed).
torch::Tensor load_image(const std::string& path, const ModelConfig& cfg);
void save_image(const std::string& path, const torch::Tensor& image);

}  // namespace qgvae
