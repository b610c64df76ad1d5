#pragma once

#include "lcvwm/image.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace lcvwm {

/// Baseline sequential JPEG of a grayscale image; quality 1..100 with the
/// IJG quality-to-quantisation-table scaling.
std::vector<std::uint8_t> encode_jpeg(const GrayImage& image, int quality);
GrayImage decode_jpeg(std::span<const std::uint8_t> bytes);

}  // namespace lcvwm
