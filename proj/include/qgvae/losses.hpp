#pragma once

#include <optional>

#include <torch/torch.h>

namespace qgvae {

struct LossBreakdown {
    torch::Tensor rec;     // mean squared reconstruction error
    torch::Tensor commit;  // d(pq, detach(codewords))
    torch::Tensor code;    // d(detach(pq), codewords)
    torch::Tensor total;   // rec + commit_weight*commit + code_weight*code
    double commit_weight = 1.0;
    double code_weight = 0.25;
};

// Composite VQ loss. `codewords` are the selected codebook rows before the
// straight-through trick, so gradient routing falls out of the detaches here.
// A 0/1 frequency mask restricts commit/code to unmasked columns.
LossBreakdown vq_loss(const torch::Tensor& x, const torch::Tensor& x_hat,
                      const torch::Tensor& pre_quant, const torch::Tensor& codewords,
                      double code_weight = 0.25, double commit_weight = 1.0,
                      const std::optional<torch::Tensor>& mask = std::nullopt);

// 10*log10(max_value^2 / MSE); +infinity for identical inputs.
double psnr(const torch::Tensor& x, const torch::Tensor& x_hat, double max_value = 1.0);

// Windowed SSIM, 11x11 Gaussian (sigma 1.5), k1=0.01, k2=0.03, averaged over
// channels and batch. Throws std::invalid_argument if the window does not fit.
double ssim(const torch::Tensor& x, const torch::Tensor& x_hat, double max_value = 1.0);

}  // namespace qgvae
