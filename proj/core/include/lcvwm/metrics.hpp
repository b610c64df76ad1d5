#pragma once

#include "lcvwm/codec.hpp"
#include "lcvwm/image.hpp"

namespace lcvwm {

/// 10 log10(255^2 / MSE). Identical images give +infinity.
double psnr(const GrayImage& a, const GrayImage& b);

/// Mean SSIM over all valid 11x11 windows (Gaussian, sigma 1.5), K1 = 0.01,
/// K2 = 0.03, L = 255.
double ssim(const GrayImage& a, const GrayImage& b);

struct SimilarityResult {
    double nc = 0.0;
    double ber = 0.0;
};

/// BER is the normalised Hamming distance. NC is the binary cross-correlation
/// sum(w w') / sqrt(sum w^2 sum w'^2); two all-zero streams give NC 1, a
/// single all-zero stream gives 0.
SimilarityResult similarity(const Watermark& original, const Watermark& extracted);

}  // namespace lcvwm
