#include "geneo/idx_io.hpp"

#include <fstream>

#include "geneo/errors.hpp"

namespace geneo {

namespace {

std::uint32_t read_be32(std::istream& in) {
    std::uint8_t b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (!in) throw ParseError("truncated IDX header");
    return (std::uint32_t(b[0]) << 24) | (std::uint32_t(b[1]) << 16) | (std::uint32_t(b[2]) << 8) |
           std::uint32_t(b[3]);
}

std::ifstream open_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    return in;
}

}  // namespace

IdxImages read_idx_images(const std::string& path) {
    auto in = open_binary(path);
    if (read_be32(in) != 0x00000803u) throw ParseError(path + ": bad image-file magic");
    IdxImages images;
    images.count = static_cast<int>(read_be32(in));
    images.rows = static_cast<int>(read_be32(in));
    images.cols = static_cast<int>(read_be32(in));
    if (images.count < 0 || images.rows <= 0 || images.cols <= 0) throw ParseError(path + ": bad IDX dimensions");
    const std::size_t total = std::size_t(images.count) * images.rows * images.cols;
    images.pixels.resize(total);
    in.read(reinterpret_cast<char*>(images.pixels.data()), static_cast<std::streamsize>(total));
    if (static_cast<std::size_t>(in.gcount()) != total) throw ParseError(path + ": truncated pixel data");
    return images;
}

std::vector<std::uint8_t> read_idx_labels(const std::string& path) {
    auto in = open_binary(path);
    if (read_be32(in) != 0x00000801u) throw ParseError(path + ": bad label-file magic");
    const std::uint32_t count = read_be32(in);
    std::vector<std::uint8_t> labels(count);
    in.read(reinterpret_cast<char*>(labels.data()), static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count) throw ParseError(path + ": truncated label data");
    return labels;
}

}  // namespace geneo
