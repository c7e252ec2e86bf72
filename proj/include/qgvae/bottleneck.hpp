#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include <torch/torch.h>

#include "qgvae/codebook.hpp"

namespace qgvae {

// [B, C, H', W'] feature map -> [B, W'*H', C] slice matrix. Pure reindexing:
// spatial position (x, y) lands at flat index y*W' + x.
torch::Tensor collapse_transpose(const torch::Tensor& feature_map);

// Exact inverse of collapse_transpose.
torch::Tensor expand_transpose(const torch::Tensor& slice_matrix, int64_t width,
                               int64_t height);

// Per-head affine maps between flattened feature maps and quantisation space.
// Head h owns the contiguous frequency block [h*C/heads, (h+1)*C/heads).
struct HeadProjectionImpl : torch::nn::Module {
    HeadProjectionImpl(int64_t num_heads, int64_t feature_len, int64_t quant_dim,
                       int64_t num_tokens);

    // [B, W'*H', C] -> [B, d, C]
    torch::Tensor project(const torch::Tensor& slice_matrix);
    // [B, d, C] -> [B, W'*H', C]
    torch::Tensor unproject(const torch::Tensor& quantised);

    torch::Tensor enc_weight;  // [heads, d, WH]
    torch::Tensor enc_bias;    // [heads, d]
    torch::Tensor dec_weight;  // [heads, WH, d]
    torch::Tensor dec_bias;    // [heads, WH]

    int64_t num_heads;
    int64_t feature_len;
    int64_t quant_dim;
    int64_t num_tokens;
};
TORCH_MODULE(HeadProjection);

// argmin_j ||v - codebook[j]||^2 with ties broken by lowest index.
std::pair<int64_t, torch::Tensor> nearest_codeword(const torch::Tensor& v,
                                                   const torch::Tensor& codebook);

struct QuantiseResult {
    torch::Tensor indices;    // [B, C] int64
    torch::Tensor codewords;  // [B, d, C] selected rows (grad flows to codebooks)
    torch::Tensor quantised;  // [B, d, C] straight-through estimate
    torch::Tensor commit_loss;  // scalar; pulls pq toward detached codewords
    torch::Tensor code_loss;    // scalar; pulls codewords toward detached pq
};

// Quantises each frequency column against its own codebook. When a 0/1 mask
// over frequencies is given, masked columns are excluded from both losses.
QuantiseResult quantise_all(const torch::Tensor& pre_quant, const CodebookBank& bank,
                            const std::optional<torch::Tensor>& mask = std::nullopt);

}  // namespace qgvae
