#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <torch/torch.h>

#include "qgvae/config.hpp"
#include "qgvae/model.hpp"

namespace qgvae {

// Incremental MD5, used for checkpoint/model digests.
std::array<uint8_t, 16> md5(const void* data, size_t size);

class Md5 {
public:
    Md5();
    ~Md5();
    Md5(const Md5&) = delete;
    Md5& operator=(const Md5&) = delete;
    void update(const void* data, size_t size);
    std::array<uint8_t, 16> finish();

private:
    void* ctx_;
};

// Mutable training-loop state that lives outside the parameter tensors.
struct TrainMeta {
    int64_t global_step = 0;
    int64_t epoch = 0;
    int64_t steps_since_reset = 0;
    std::string shuffle_rng;  // serialized mt19937_64 streams
    std::string mask_rng;
    std::string reset_rng;
};

// Self-describing container: "QGVC" magic, format version, config JSON,
// named weight/buffer arrays, optional optimizer blob.
void save_checkpoint(const std::string& path, const VqModel& model,
                     const TrainConfig& tcfg, const TrainMeta& meta,
                     const torch::optim::Optimizer* optimizer = nullptr);

struct LoadedCheckpoint {
    VqModel model;
    Config config;
    TrainMeta meta;
    std::string optimizer_blob;  // empty if the checkpoint carried none
};

LoadedCheckpoint load_checkpoint(const std::string& path);

}  // namespace qgvae
