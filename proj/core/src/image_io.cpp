#include "lcvwm/image_io.hpp"

#include "lcvwm/error.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

namespace lcvwm {
namespace {

std::vector<char> slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

GrayImage decode_png(const std::vector<char>& bytes, const std::filesystem::path& path) {
    png_image img;
    std::memset(&img, 0, sizeof img);
    img.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&img, bytes.data(), bytes.size()))
        throw InputError("bad PNG " + path.string() + ": " + img.message);

    const bool colour = (img.format & PNG_FORMAT_FLAG_COLOR) != 0;
    img.format = colour ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    std::vector<std::uint8_t> buffer(PNG_IMAGE_SIZE(img));
    if (!png_image_finish_read(&img, nullptr, buffer.data(), 0, nullptr)) {
        std::string msg = img.message;
        png_image_free(&img);
        throw InputError("bad PNG " + path.string() + ": " + msg);
    }

    const std::size_t w = img.width, h = img.height;
    if (!colour)
        return GrayImage(w, h, std::move(buffer));

    std::vector<std::uint8_t> luma(w * h);
    for (std::size_t i = 0; i < w * h; ++i)
        luma[i] = bt601_luma(buffer[3 * i], buffer[3 * i + 1], buffer[3 * i + 2]);
    return GrayImage(w, h, std::move(luma));
}

// Netpbm header tokens may be separated by whitespace and '#' comments.
std::size_t next_header_int(const std::vector<char>& bytes, std::size_t& pos) {
    while (pos < bytes.size()) {
        const char ch = bytes[pos];
        if (ch == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n')
                ++pos;
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            ++pos;
        } else {
            break;
        }
    }
    std::size_t value = 0;
    std::size_t digits = 0;
    while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
        value = value * 10 + static_cast<std::size_t>(bytes[pos] - '0');
        ++pos;
        ++digits;
    }
    if (digits == 0)
        throw InputError("malformed PGM header");
    return value;
}

GrayImage decode_pgm(const std::vector<char>& bytes) {
    std::size_t pos = 2;
    const std::size_t w = next_header_int(bytes, pos);
    const std::size_t h = next_header_int(bytes, pos);
    const std::size_t maxval = next_header_int(bytes, pos);
    if (maxval == 0 || maxval > 255)
        throw InputError("only 8-bit PGM is supported (maxval " + std::to_string(maxval) + ")");
    ++pos;  // single whitespace before raster
    if (bytes.size() < pos + w * h)
        throw InputError("truncated PGM raster");

    std::vector<std::uint8_t> samples(w * h);
    for (std::size_t i = 0; i < w * h; ++i) {
        const auto v = static_cast<std::uint8_t>(bytes[pos + i]);
        samples[i] = maxval == 255 ? v
                                   : static_cast<std::uint8_t>(std::lround(
                                         std::min<double>(v, maxval) * 255.0 / static_cast<double>(maxval)));
    }
    return GrayImage(w, h, std::move(samples));
}

}  // namespace

std::uint8_t bt601_luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept {
    const double y = 0.299 * r + 0.587 * g + 0.114 * b;
    return static_cast<std::uint8_t>(std::lround(std::clamp(y, 0.0, 255.0)));
}

GrayImage read_image(const std::filesystem::path& path) {
    const auto bytes = slurp(path);
    static constexpr std::array<unsigned char, 8> png_sig{0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
    if (bytes.size() >= 8 && std::equal(png_sig.begin(), png_sig.end(), bytes.begin(),
                                        [](unsigned char a, char b) { return a == static_cast<unsigned char>(b); }))
        return decode_png(bytes, path);
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5')
        return decode_pgm(bytes);
    throw InputError("unsupported image format: " + path.string() + " (expected PNG or binary PGM)");
}

void write_png(const GrayImage& image, const std::filesystem::path& path) {
    png_image img;
    std::memset(&img, 0, sizeof img);
    img.version = PNG_IMAGE_VERSION;
    img.width = static_cast<png_uint_32>(image.width());
    img.height = static_cast<png_uint_32>(image.height());
    img.format = PNG_FORMAT_GRAY;
    if (!png_image_write_to_file(&img, path.string().c_str(), 0, image.samples().data(), 0, nullptr))
        throw InputError("cannot write PNG " + path.string() + ": " + img.message);
}

void write_pgm(const GrayImage& image, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot open " + path.string() + " for writing");
    out << "P5\n" << image.width() << ' ' << image.height() << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.samples().data()),
              static_cast<std::streamsize>(image.samples().size()));
    if (!out)
        throw InputError("short write to " + path.string());
}

void write_image(const GrayImage& image, const std::filesystem::path& path) {
    auto ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".png")
        write_png(image, path);
    else
        write_pgm(image, path);
}

void write_normalized_pgm(const CoeffGrid& grid, const std::filesystem::path& path) {
    auto vals = grid.values();
    const auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
    const double span = (vals.empty() || *hi == *lo) ? 1.0 : *hi - *lo;
    const double base = vals.empty() ? 0.0 : *lo;
    CoeffGrid scaled(grid.width(), grid.height());
    auto dst = scaled.values();
    for (std::size_t i = 0; i < vals.size(); ++i)
        dst[i] = (vals[i] - base) * 255.0 / span;
    write_pgm(quantize(scaled), path);
}

}  // namespace lcvwm
