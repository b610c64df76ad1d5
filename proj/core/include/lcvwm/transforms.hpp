#pragma once

#include "lcvwm/image.hpp"

#include <array>

namespace lcvwm {

// ---- Block DCT --------------------------------------------------------------

/// Orthonormal 2-D DCT-II of a square block.
CoeffGrid dct2(const CoeffGrid& block);
/// Inverse of dct2 (orthonormal DCT-III).
CoeffGrid idct2(const CoeffGrid& coeffs);

// ---- Laplacian pyramid (one level) -----------------------------------------

struct PyramidLevel {
    CoeffGrid approximate;  // (M/2) x (N/2) lowpass
    CoeffGrid bandpass;     // M x N prediction residual
};

/// 9/7 lowpass + 2x decimation; the bandpass is the full-resolution residual of
/// predicting the input from the approximate scale. Requires even dimensions.
PyramidLevel lp_decompose(const CoeffGrid& image);

/// Burt-Adelson synthesis: prediction from the approximate scale plus bandpass.
CoeffGrid lp_reconstruct(const CoeffGrid& approximate, const CoeffGrid& bandpass);

/// Upsample-and-interpolate the approximate scale to full resolution.
CoeffGrid lp_predict(const CoeffGrid& approximate);

// ---- Directional filter bank (two levels, four wedges) ---------------------

using DirectionalBands = std::array<CoeffGrid, 4>;

/// Critically sampled four-direction split of an M x N grid into four
/// (M/2) x (N/2) subbands. Band k concentrates spatial frequencies whose
/// orientation angle lies in [45k, 45(k+1)) degrees. Requires dimensions
/// divisible by 4.
DirectionalBands dfb_decompose(const CoeffGrid& bandpass);
CoeffGrid dfb_reconstruct(const DirectionalBands& bands);

// ---- Contourlet (one pyramid level, four directions) -----------------------

struct SubbandSet {
    CoeffGrid approximate;
    DirectionalBands details;
};

SubbandSet ct_decompose(const CoeffGrid& image);
SubbandSet ct_decompose(const GrayImage& image);
/// Real-valued inverse; quantisation to 8 bits is the caller's business.
CoeffGrid ct_reconstruct(const SubbandSet& subbands);

}  // namespace lcvwm
