#pragma once

#include <cstdint>

#include <torch/torch.h>

#include "qgvae/config.hpp"

namespace qgvae {

// norm -> silu -> conv -> norm -> silu -> conv, plus identity skip.
struct ResidualBlockImpl : torch::nn::Module {
    explicit ResidualBlockImpl(int64_t channels);
    torch::Tensor forward(const torch::Tensor& x);

    torch::nn::GroupNorm norm1{nullptr}, norm2{nullptr};
    torch::nn::Conv2d conv1{nullptr}, conv2{nullptr};
};
TORCH_MODULE(ResidualBlock);

// Channel width after k halvings: doubles per level, capped at `cap`.
int64_t level_channels(int64_t cap, int64_t downscale_factor, int64_t k);

// Maps [B, in, H, W] to [B, out, H/2^f, W/2^f]. Strided-conv downscaling,
// nearest-neighbour + conv upsampling, skip concatenation at the output
// resolution, one interior level below it.
struct UNetEncoderImpl : torch::nn::Module {
    UNetEncoderImpl(int64_t in_channels, int64_t out_channels, int64_t downscale_factor,
                    int64_t channel_cap, int64_t blocks);
    torch::Tensor forward(const torch::Tensor& x);

    torch::nn::Conv2d stem{nullptr};
    torch::nn::ModuleList down_blocks;  // f x (blocks RB + strided conv)
    torch::nn::Sequential skip_blocks{nullptr};
    torch::nn::Conv2d down{nullptr};
    torch::nn::Sequential mid_blocks{nullptr};
    torch::nn::Conv2d up{nullptr};
    torch::nn::Conv2d fuse{nullptr};
    torch::nn::Sequential post_blocks{nullptr};
    torch::nn::Conv2d out{nullptr};
    int64_t in_channels, out_channels, downscale_factor;
};
TORCH_MODULE(UNetEncoder);

// Mirror of the encoder: [B, in, H/2^f, W/2^f] -> [B, out, H, W].
struct UNetDecoderImpl : torch::nn::Module {
    UNetDecoderImpl(int64_t in_channels, int64_t out_channels, int64_t downscale_factor,
                    int64_t channel_cap, int64_t blocks);
    torch::Tensor forward(const torch::Tensor& x);

    torch::nn::Conv2d stem{nullptr};
    torch::nn::Sequential skip_blocks{nullptr};
    torch::nn::Conv2d down{nullptr};
    torch::nn::Sequential mid_blocks{nullptr};
    torch::nn::Conv2d up{nullptr};
    torch::nn::Conv2d fuse{nullptr};
    torch::nn::Sequential post_blocks{nullptr};
    torch::nn::ModuleList up_blocks;  // f x (upsample conv + blocks RB)
    torch::nn::Conv2d out{nullptr};
    int64_t in_channels, out_channels, downscale_factor;
};
TORCH_MODULE(UNetDecoder);

}  // namespace qgvae
