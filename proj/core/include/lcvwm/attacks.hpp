#pragma once

#include "lcvwm/image.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lcvwm {

namespace attack {

struct Jpeg {
    int quality = 70;
};
/// Rotate by `degrees` about the centre and back (distortion only).
struct Rotate {
    double degrees = 0.0;
};
/// Keep the centred region of area (1 - ratio) M N, fill the rest with 128.
struct Crop {
    double ratio = 0.25;
};
/// Bilinear scale by `scale`, then back to the original size.
struct Resize {
    double scale = 0.5;
};
/// Additive N(0, variance * 255^2).
struct GaussianNoise {
    double variance = 0.005;
    std::uint64_t seed = 0;
};
/// Each pixel becomes 0 or 255 with probability density / 2 each.
struct SaltPepper {
    double density = 0.01;
    std::uint64_t seed = 0;
};
struct Median {
    int window = 3;
};
struct HistEq {};
struct Gamma {
    double exponent = 0.8;
};
/// Unsharp mask with a 3x3 binomial blur.
struct Sharpen {
    double amount = 1.0;
};

}  // namespace attack

using AttackSpec = std::variant<attack::Jpeg, attack::Rotate, attack::Crop, attack::Resize, attack::GaussianNoise,
                                attack::SaltPepper, attack::Median, attack::HistEq, attack::Gamma, attack::Sharpen>;

/// Throws InputError when parameters are out of range.
void validate(const AttackSpec& spec);

/// Parses "jpeg:70", "rotate:0.5", "crop:0.25", "resize:0.5", "gn:0.005",
/// "sp:0.01", "median:3", "histeq", "gamma[:0.8]", "sharpen[:1.0]". Noise
/// variants take `seed`.
AttackSpec parse_attack(std::string_view text, std::uint64_t seed = 0);

/// Comma-separated list, or "all" for standard_attack_suite().
std::vector<AttackSpec> parse_attack_list(std::string_view text, std::uint64_t seed = 0);

/// Compact label in the same syntax parse_attack accepts.
std::string to_string(const AttackSpec& spec);

/// The twelve-attack robustness suite: gamma 0.8, histogram equalisation,
/// 3x3 median, JPEG 70, salt & pepper 0.01, resize 1/2, sharpen 1.0,
/// Gaussian noise 0.005, crop 10% and 25%, rotation 20 and 45 degrees.
std::vector<AttackSpec> standard_attack_suite(std::uint64_t seed = 0);

/// Output always has the input's dimensions. Deterministic for a given spec.
GrayImage apply_attack(const GrayImage& image, const AttackSpec& spec);

}  // namespace lcvwm
