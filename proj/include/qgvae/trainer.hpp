#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>

#include <torch/torch.h>

#include "qgvae/checkpoint.hpp"
#include "qgvae/config.hpp"
#include "qgvae/data.hpp"
#include "qgvae/losses.hpp"
#include "qgvae/model.hpp"

namespace qgvae {

// Single-thread deterministic backend mode; call before building models.
void setup_backend(uint64_t seed, bool deterministic);

struct EvalRecord {
    double mse = 0.0;
    double psnr = 0.0;
    double ssim = 0.0;
};

// Mean per-image metrics (on the [0, 1] scale) of an arbitrary forward
// function over a dataset. Throws DataError on an empty dataset.
EvalRecord evaluate(const std::function<torch::Tensor(const torch::Tensor&)>& forward,
                    const Dataset& dataset, int64_t batch_size = 256);

// Owns the full mutable training state: model, optimizer, RNG streams, logs.
class Trainer {
public:
    Trainer(const Config& config, std::string out_dir);

    // Fresh state from config.seed, or resume from a checkpoint file.
    void init();
    void resume(const std::string& checkpoint_path);

    LossBreakdown train_step(const torch::Tensor& batch);

    // Epoch loop with shuffling, per-epoch evaluation, and checkpointing.
    EvalRecord fit(const Dataset& train, const Dataset& test);

    EvalRecord evaluate_model(const Dataset& dataset);

    void save(const std::string& path) const;

    const VqModel& model() const { return model_; }
    int64_t global_step() const { return meta_.global_step; }

private:
    void log_metrics(const nlohmann::json& record);
    void log_event(const nlohmann::json& record);
    torch::optim::AdamW& optimizer() { return *optimizer_; }

    Config cfg_;
    std::string out_dir_;
    VqModel model_;
    std::unique_ptr<torch::optim::AdamW> optimizer_;
    TrainMeta meta_;
    std::mt19937_64 shuffle_rng_;
    std::mt19937_64 mask_rng_;
    std::mt19937_64 reset_rng_;
};

}  // namespace qgvae
