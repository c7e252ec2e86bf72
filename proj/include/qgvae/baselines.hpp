#pragma once

#include <cstdint>
#include <vector>

#include <torch/torch.h>

#include "qgvae/bottleneck.hpp"

namespace qgvae {

// 2D DFT of a single-channel [H, W] image; complex [H, W], entry (v, u) holds
// frequency u along x and v along y.
torch::Tensor dft_forward(const torch::Tensor& image);

// Number of frequency components when conjugate-symmetric pairs count as one.
int64_t dft_component_count(int64_t width, int64_t height);

// Inverse transform keeping the n lowest-frequency components (|u|+|v|
// ascending, DC first, conjugate pairs kept together), zeroing the rest.
torch::Tensor dft_truncate_reconstruct(const torch::Tensor& image, int64_t n);

// Burt-Adelson pyramid: levels[0..n-1] are Laplacian bands, levels[n] is the
// residual Gaussian base. Collapse reproduces the input exactly.
struct LaplacianPyramid {
    std::vector<torch::Tensor> levels;
};

LaplacianPyramid laplacian_build(const torch::Tensor& image, int64_t n);
torch::Tensor laplacian_collapse(const LaplacianPyramid& pyramid);

// reduce/expand primitives (5-tap binomial blur, 2x decimation / zero-insert).
torch::Tensor pyramid_reduce(const torch::Tensor& image);
torch::Tensor pyramid_expand(const torch::Tensor& image);

struct GridQuantiseResult {
    torch::Tensor indices;    // [B, H', W'] int64
    torch::Tensor quantised;  // [B, d, H', W'] straight-through
    torch::Tensor codewords;  // [B, d, H', W'] selected rows
    torch::Tensor commit_loss;
    torch::Tensor code_loss;
};

// Vanilla VQ-VAE bottleneck: every spatial position quantised against one
// shared [V, d] codebook. Feature map channels must equal d.
GridQuantiseResult vqvae_grid_bottleneck(const torch::Tensor& feature_map,
                                         const torch::Tensor& shared_codebook);

}  // namespace qgvae
