#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <torch/torch.h>

namespace qgvae {

struct ResetPolicy {
    int64_t window = 500;
    double perturb_scale = 1e-3;  // epsilon, relative to the mean codeword norm
    double threshold = 0.0;       // accumulators <= threshold count as unused
};

struct ResetMove {
    int64_t codebook;
    int64_t from_index;
    int64_t to_index;
};

// C independent codebooks (optionally shared between groups of frequencies)
// with per-codeword gradient-magnitude accumulators driving dead-code resets.
class CodebookBank {
public:
    CodebookBank() = default;
    CodebookBank(int64_t num_tokens, int64_t codebook_size, int64_t quant_dim,
                 int64_t share_group = 1);

    // [num_codebooks, V, d]; registered as a parameter by the owning module.
    torch::Tensor codebooks;
    // [num_codebooks, V]; non-negative accumulated gradient magnitudes.
    torch::Tensor grad_accum;
    int64_t steps_since_reset = 0;

    int64_t num_tokens = 0;
    int64_t codebook_size = 0;
    int64_t quant_dim = 0;
    int64_t share_group = 1;

    int64_t num_codebooks() const { return num_tokens / share_group; }

    // Codebook serving frequency c, as a [V, d] view.
    torch::Tensor codebook_for(int64_t freq) const;

    // Codebooks expanded to one [V, d] slice per frequency: [C, V, d].
    // A view when share_group == 1, otherwise a repeat (grad still flows).
    torch::Tensor per_frequency_codebooks() const;

    // grad_accum += norms; steps_since_reset += 1. norms is [num_codebooks, V].
    void accumulate(const torch::Tensor& per_codeword_grad_norms);

    // No-op until steps_since_reset reaches policy.window. Then, per codebook,
    // relocates every unused codeword (ascending index) onto the codeword with
    // the currently largest accumulator plus an epsilon perturbation, halving
    // the target's accumulator between the pair after each move. Accumulators
    // and the step counter end up zeroed.
    std::vector<ResetMove> maybe_reset(const ResetPolicy& policy, std::mt19937_64& rng);
};

}  // namespace qgvae
