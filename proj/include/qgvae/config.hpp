#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

namespace qgvae {

// Architectural hyperparameters. Field names mirror the config file schema.
struct ModelConfig {
    int64_t num_tokens = 64;        // C: number of pseudo frequency tokens
    int64_t downscale_factor = 0;   // f: spatial halvings before the bottleneck
    int64_t num_heads = 8;          // independent affine projection heads
    int64_t codebook_size = 512;    // V: codewords per codebook
    int64_t quant_dim = 64;         // d: quantisation space dimension
    int64_t unet_blocks = 1;        // residual blocks per resolution level
    int64_t unet_channels = 32;     // channel cap at the deepest level
    int64_t reset_window = 100;     // T: steps between codebook reset sweeps
    bool ordering_enabled = false;  // coarse-to-fine prefix-mask regulariser
    int64_t input_channels = 1;
    int64_t image_width = 32;
    int64_t image_height = 32;
    int64_t codebook_share_group = 1;  // frequencies sharing one codebook
    double commit_weight = 1.0;
    double code_weight = 0.25;
    std::string bottleneck = "global";  // "global" (headed projection) or "grid"

    int64_t feature_width() const { return image_width >> downscale_factor; }
    int64_t feature_height() const { return image_height >> downscale_factor; }
    int64_t feature_len() const { return feature_width() * feature_height(); }

    // Tokens actually emitted per image: C for the global bottleneck, one per
    // bottleneck grid cell for the vanilla grid baseline.
    int64_t token_count() const {
        return bottleneck == "grid" ? feature_len() : num_tokens;
    }

    void validate() const;  // throws ConfigError
};

struct TrainConfig {
    std::string dataset = "mnist";  // "mnist", "cifar10", or a directory path
    int64_t epochs = 15;
    int64_t batch_size = 128;
    double lr = 2e-4;
    double weight_decay = 0.01;
    uint64_t seed = 0;
    bool deterministic = true;
    double reset_perturb_scale = 1e-3;
    double reset_threshold = 0.0;  // accumulators <= threshold count as unused
    int64_t log_every = 50;
    int64_t eval_batch = 256;
    int64_t checkpoint_every_epochs = 1;

    void validate() const;
};

struct Config {
    ModelConfig model;
    TrainConfig train;
};

void to_json(nlohmann::json& j, const ModelConfig& c);
void from_json(const nlohmann::json& j, ModelConfig& c);
void to_json(nlohmann::json& j, const TrainConfig& c);
void from_json(const nlohmann::json& j, TrainConfig& c);
void to_json(nlohmann::json& j, const Config& c);
void from_json(const nlohmann::json& j, Config& c);

Config load_config(const std::string& path);

// Applies a "dotted.key=value" override, e.g. "model.num_tokens=256".
void apply_override(nlohmann::json& j, const std::string& spec);

}  // namespace qgvae
