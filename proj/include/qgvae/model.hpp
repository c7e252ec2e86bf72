#pragma once

#include <memory>
#include <optional>

#include <torch/torch.h>

#include "qgvae/backbone.hpp"
#include "qgvae/bottleneck.hpp"
#include "qgvae/codebook.hpp"
#include "qgvae/config.hpp"
#include "qgvae/ordering.hpp"

namespace qgvae {

struct ForwardResult {
    torch::Tensor feature_map;  // [B, C, H', W']
    torch::Tensor pre_quant;    // [B, d, C]
    torch::Tensor indices;      // [B, tokens]
    torch::Tensor codewords;    // [B, d, C]
    torch::Tensor quantised;    // [B, d, C] straight-through (mask applied)
    torch::Tensor recon;        // [B, ch, H, W]
    torch::Tensor commit_loss;
    torch::Tensor code_loss;
};

// Common surface of the QG-VAE and the vanilla grid baseline, so the trainer,
// codec, and CLI can drive either.
struct VqModelImpl : torch::nn::Module {
    virtual ~VqModelImpl() = default;

    // Full autoencoding pass. The optional mask is the ordering regulariser's
    // prefix mask; it zeroes quantised columns >= k and restricts the
    // commitment/code losses to unmasked frequencies.
    virtual ForwardResult forward(const torch::Tensor& x,
                                  const std::optional<OrderingMask>& mask = std::nullopt) = 0;

    // [B, tokens] indices -> [B, ch, H, W] reconstruction (no grad).
    virtual torch::Tensor decode_indices(const torch::Tensor& indices) = 0;

    virtual CodebookBank& bank() = 0;

    // [B, ch, H, W] -> [B, tokens] (no grad).
    torch::Tensor encode_indices(const torch::Tensor& x);

    ModelConfig cfg;
};

using VqModel = std::shared_ptr<VqModelImpl>;

// The QG-VAE: U-Net -> collapse/transpose -> headed projection -> per-token
// quantisation -> mirrored decode path.
struct QgvaeModelImpl : VqModelImpl {
    explicit QgvaeModelImpl(const ModelConfig& cfg);

    ForwardResult forward(const torch::Tensor& x,
                          const std::optional<OrderingMask>& mask = std::nullopt) override;
    torch::Tensor decode_indices(const torch::Tensor& indices) override;
    CodebookBank& bank() override { return bank_; }

    // Decode from an already-quantised [B, d, C] matrix.
    torch::Tensor decode_quantised(const torch::Tensor& quantised);

    UNetEncoder encoder{nullptr};
    UNetDecoder decoder{nullptr};
    HeadProjection heads{nullptr};
    CodebookBank bank_;
};

// Vanilla VQ-VAE baseline: each bottleneck grid cell is one local token
// quantised against a single shared codebook. No projection heads.
struct GridVqvaeModelImpl : VqModelImpl {
    explicit GridVqvaeModelImpl(const ModelConfig& cfg);

    ForwardResult forward(const torch::Tensor& x,
                          const std::optional<OrderingMask>& mask = std::nullopt) override;
    torch::Tensor decode_indices(const torch::Tensor& indices) override;
    CodebookBank& bank() override { return bank_; }

    UNetEncoder encoder{nullptr};
    UNetDecoder decoder{nullptr};
    CodebookBank bank_;
};

VqModel make_model(const ModelConfig& cfg);

// Reconstructions from token prefixes of increasing length (one per k).
std::vector<torch::Tensor> decompose(const torch::Tensor& x, const VqModel& model,
                                     const std::vector<int64_t>& ks);

// Mean absolute output change [ch, H, W] when one token of a single image is
// replaced by every codeword in turn (the single-token influence map).
torch::Tensor token_influence(const torch::Tensor& image, const VqModel& model,
                              int64_t token, int64_t batch = 64);

}  // namespace qgvae
