#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "panofold/image.hpp"

namespace panofold {

// Input bytes that are neither a decodable PNG nor JPEG.
class ImageDecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Decodes PNG or JPEG (sniffed from the signature) to RGBA8. JPEG gets alpha 255.
Image decode_image(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_png(const Image& image);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

inline EquirectImage load_equirect(const std::filesystem::path& path) {
    return EquirectImage(decode_image(read_file(path)));
}

}  // namespace panofold
