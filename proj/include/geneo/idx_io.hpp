#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace geneo {

// IDX image container (the MNIST on-disk layout): big-endian magic
// 0x00000803, then count/rows/cols as 32-bit big-endian words, then unsigned
// bytes row-major per image. Label files use magic 0x00000801.
struct IdxImages {
    int count = 0;
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> pixels;

    std::span<const std::uint8_t> image(int i) const {
        const std::size_t stride = std::size_t(rows) * cols;
        return {pixels.data() + stride * i, stride};
    }
};

IdxImages read_idx_images(const std::string& path);
std::vector<std::uint8_t> read_idx_labels(const std::string& path);

}  // namespace geneo
