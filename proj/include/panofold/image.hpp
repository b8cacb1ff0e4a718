#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace panofold {

struct Rgba {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
    std::uint8_t a = 0;

    friend bool operator==(const Rgba&, const Rgba&) = default;
};

// Row-major RGBA8 raster.
class Image {
public:
    Image() = default;
    Image(int width, int height, Rgba fill = {})
        : width_(width), height_(height) {
        if (width <= 0 || height <= 0) throw std::invalid_argument("Image: empty raster");
        pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
    }

    [[nodiscard]] int width() const { return width_; }
    [[nodiscard]] int height() const { return height_; }
    [[nodiscard]] bool empty() const { return pixels_.empty(); }

    Rgba& at(int x, int y) { return pixels_[index(x, y)]; }
    [[nodiscard]] const Rgba& at(int x, int y) const { return pixels_[index(x, y)]; }

    [[nodiscard]] const std::vector<Rgba>& pixels() const { return pixels_; }
    std::vector<Rgba>& pixels() { return pixels_; }

    friend bool operator==(const Image&, const Image&) = default;

private:
    [[nodiscard]] std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<Rgba> pixels_;
};

using RasterImage = Image;

// Equirectangular source. Pixel (u, v) center sits at
//   lon = 2*pi*(u + 0.5)/width - pi,  lat = pi/2 - pi*(v + 0.5)/height.
class EquirectImage {
public:
    EquirectImage() = default;
    // Throws std::invalid_argument unless width >= 2 and height >= 1.
    explicit EquirectImage(Image image);

    [[nodiscard]] int width() const { return image_.width(); }
    [[nodiscard]] int height() const { return image_.height(); }
    [[nodiscard]] const Image& image() const { return image_; }
    [[nodiscard]] const Rgba& at(int u, int v) const { return image_.at(u, v); }

    // Set when |width - 2*height| > 2.
    [[nodiscard]] bool nonstandard_aspect() const { return nonstandard_aspect_; }

private:
    Image image_;
    bool nonstandard_aspect_ = false;
};

}  // namespace panofold
