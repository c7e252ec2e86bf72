#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <torch/torch.h>

#include "qgvae/model.hpp"

namespace qgvae {

// Bits needed per index for a codebook of size V.
int64_t bits_per_index(int64_t codebook_size);

// Payload bytes for C tokens at codebook size V.
int64_t payload_size(int64_t num_tokens, int64_t codebook_size);

struct TokenFileHeader {
    static constexpr std::array<char, 4> kMagic = {'Q', 'G', 'V', 'T'};
    static constexpr uint8_t kVersion = 1;

    uint8_t version = kVersion;
    uint16_t num_tokens = 0;
    uint16_t codebook_size = 0;
    uint16_t width = 0;
    uint16_t height = 0;
    uint8_t downscale_factor = 0;
    std::array<uint8_t, 16> model_id{};
};

struct TokenFile {
    TokenFileHeader header;
    std::vector<uint8_t> payload;
};

// MSB-first bit packing of one index row ([C] int64), frequency order 0..C-1,
// final partial byte zero-padded.
std::vector<uint8_t> pack_indices(const torch::Tensor& indices, int64_t codebook_size);

// Inverse of pack_indices; validates payload length and index range.
torch::Tensor unpack_indices(const std::vector<uint8_t>& payload, int64_t num_tokens,
                             int64_t codebook_size);

void write_token_file(const std::string& path, const TokenFile& file);
TokenFile read_token_file(const std::string& path);

// 16-byte digest binding token files to the producing checkpoint (config plus
// all parameters).
std::array<uint8_t, 16> model_digest(const VqModel& model);

// Tokenises a single [ch, H, W] or [1, ch, H, W] image.
TokenFile compress(const torch::Tensor& image, const VqModel& model);

// Reconstructs the image; refuses token files from a different model.
torch::Tensor decompress(const TokenFile& file, const VqModel& model);

}  // namespace qgvae
