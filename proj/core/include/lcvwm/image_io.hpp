#pragma once

#include "lcvwm/image.hpp"

#include <filesystem>

namespace lcvwm {

/// Reads an 8-bit PNG or binary PGM (P5), chosen by file signature. Colour
/// inputs are converted to BT.601 luminance.
GrayImage read_image(const std::filesystem::path& path);

/// Writes PNG for ".png", PGM (P5) otherwise.
void write_image(const GrayImage& image, const std::filesystem::path& path);

void write_png(const GrayImage& image, const std::filesystem::path& path);
void write_pgm(const GrayImage& image, const std::filesystem::path& path);

/// Dumps a coefficient grid as PGM after mapping [min,max] onto [0,255].
void write_normalized_pgm(const CoeffGrid& grid, const std::filesystem::path& path);

/// BT.601 luma of one RGB triple, rounded to 8 bits.
std::uint8_t bt601_luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept;

}  // namespace lcvwm
