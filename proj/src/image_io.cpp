#include "panofold/image_io.hpp"

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>

#include <png.h>
// jpeglib.h needs FILE and size_t declared first
#include <jpeglib.h>

namespace panofold {

namespace {

bool is_png(std::span<const std::uint8_t> bytes) {
    static constexpr std::uint8_t sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    return bytes.size() >= 8 && std::memcmp(bytes.data(), sig, 8) == 0;
}

bool is_jpeg(std::span<const std::uint8_t> bytes) {
    return bytes.size() >= 3 && bytes[0] == 0xff && bytes[1] == 0xd8 && bytes[2] == 0xff;
}

Image decode_png(std::span<const std::uint8_t> bytes) {
    png_image img;
    std::memset(&img, 0, sizeof img);
    img.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&img, bytes.data(), bytes.size()))
        throw ImageDecodeError(std::string("PNG header: ") + img.message);
    img.format = PNG_FORMAT_RGBA;
    if (img.width == 0 || img.height == 0 || img.width > 1u << 16 || img.height > 1u << 16) {
        png_image_free(&img);
        throw ImageDecodeError("PNG dimensions out of range");
    }
    Image out(static_cast<int>(img.width), static_cast<int>(img.height));
    static_assert(sizeof(Rgba) == 4);
    if (!png_image_finish_read(&img, nullptr, out.pixels().data(), 0, nullptr)) {
        std::string msg = img.message;
        png_image_free(&img);
        throw ImageDecodeError("PNG data: " + msg);
    }
    return out;
}

struct JpegErrorManager {
    jpeg_error_mgr base;
    std::jmp_buf jump;
    char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, err->message);
    std::longjmp(err->jump, 1);
}

void jpeg_silent(j_common_ptr) {}

// Decodes into `out`; returns false with `err.message` set on failure. No objects with
// destructors live across the setjmp boundary.
bool decode_jpeg_into(std::span<const std::uint8_t> bytes, std::vector<std::uint8_t>& rgb,
                      JDIMENSION& width, JDIMENSION& height, JpegErrorManager& err) {
    jpeg_decompress_struct cinfo;
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_error_exit;
    err.base.output_message = jpeg_silent;
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        return false;
    }
    jpeg_create_decompress(&cinfo);
    jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);
    width = cinfo.output_width;
    height = cinfo.output_height;
    if (cinfo.output_components != 3 || width == 0 || height == 0 || width > 1u << 16 || height > 1u << 16) {
        std::snprintf(err.message, sizeof err.message, "unsupported JPEG layout");
        jpeg_destroy_decompress(&cinfo);
        return false;
    }
    rgb.resize(static_cast<std::size_t>(width) * height * 3);
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = rgb.data() + static_cast<std::size_t>(cinfo.output_scanline) * width * 3;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return true;
}

Image decode_jpeg(std::span<const std::uint8_t> bytes) {
    std::vector<std::uint8_t> rgb;
    JDIMENSION width = 0, height = 0;
    JpegErrorManager err{};
    if (!decode_jpeg_into(bytes, rgb, width, height, err))
        throw ImageDecodeError(std::string("JPEG: ") + err.message);
    Image out(static_cast<int>(width), static_cast<int>(height));
    auto& px = out.pixels();
    for (std::size_t i = 0; i < px.size(); ++i) px[i] = {rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2], 255};
    return out;
}

}  // namespace

Image decode_image(std::span<const std::uint8_t> bytes) {
    if (is_png(bytes)) return decode_png(bytes);
    if (is_jpeg(bytes)) return decode_jpeg(bytes);
    throw ImageDecodeError("unrecognized image format (expected PNG or JPEG)");
}

std::vector<std::uint8_t> encode_png(const Image& image) {
    png_image img;
    std::memset(&img, 0, sizeof img);
    img.version = PNG_IMAGE_VERSION;
    img.width = static_cast<png_uint_32>(image.width());
    img.height = static_cast<png_uint_32>(image.height());
    img.format = PNG_FORMAT_RGBA;

    png_alloc_size_t size = 0;
    if (!png_image_write_to_memory(&img, nullptr, &size, 0, image.pixels().data(), 0, nullptr))
        throw std::runtime_error(std::string("PNG encode: ") + img.message);
    std::vector<std::uint8_t> out(size);
    if (!png_image_write_to_memory(&img, out.data(), &size, 0, image.pixels().data(), 0, nullptr))
        throw std::runtime_error(std::string("PNG encode: ") + img.message);
    out.resize(size);
    return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw std::runtime_error("error reading '" + path.string() + "'");
    return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("error writing '" + path.string() + "'");
}

}  // namespace panofold
