#pragma once

#include <cstddef>
#include <vector>

namespace lcvwm {

/// Zero-phase symmetric FIR taps, stored from -radius to +radius.
struct SymmetricFilter {
    std::vector<double> taps;

    std::ptrdiff_t radius() const noexcept { return static_cast<std::ptrdiff_t>(taps.size() / 2); }
    double operator[](std::ptrdiff_t offset) const noexcept {
        return taps[static_cast<std::size_t>(offset + radius())];
    }
};

/// Biorthogonal analysis/synthesis lowpass pair with highpass filters derived
/// by modulation. Lowpass taps sum to sqrt(2).
struct FilterPair {
    SymmetricFilter analysis_lowpass;
    SymmetricFilter synthesis_lowpass;
    std::vector<double> analysis_highpass;   // taps from -radius to +radius of synthesis_lowpass
    std::vector<double> synthesis_highpass;  // taps from -radius to +radius of analysis_lowpass
};

/// The CDF 9/7 pair (9-tap analysis, 7-tap synthesis lowpass).
const FilterPair& cdf97();

/// Lifting factorisation of the same 9/7 wavelet: predict/update weights
/// applied to neighbour sums, followed by the channel scaling.
struct LiftingSteps {
    double predict1;
    double update1;
    double predict2;
    double update2;
    double scale;  // lowpass *= scale, highpass /= scale
};

inline constexpr LiftingSteps kCdf97Lifting{
    -1.586134342059924,
    -0.052980118572961,
    0.882911075530934,
    0.443506852043971,
    1.1496043988602411,
};

/// Whole-sample symmetric reflection of index i into [0, n).
std::size_t reflect_index(std::ptrdiff_t i, std::size_t n) noexcept;

}  // namespace lcvwm
