#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <torch/torch.h>

namespace qgvae {

// Prefix mask over frequencies: ones for i < k, zeros after.
struct OrderingMask {
    int64_t k = 0;
    int64_t num_tokens = 0;

    // [C] float tensor of the mask values.
    torch::Tensor as_tensor(const torch::TensorOptions& opts = {}) const;
};

OrderingMask make_mask(int64_t num_tokens, int64_t k);

// k drawn uniformly from {0, ..., C}.
OrderingMask sample_mask(int64_t num_tokens, std::mt19937_64& rng);

// Multiplies column i of a [B, d, C] matrix by mask_i.
torch::Tensor apply_ordering(const torch::Tensor& quantised, const OrderingMask& mask);

// True on batches where the regulariser is scheduled (every third batch).
inline bool ordering_scheduled(int64_t batch_index) { return batch_index % 3 == 0; }

}  // namespace qgvae
