#pragma once

#include "lcvwm/image.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace lcvwm {

/// Per-pixel complexity: for every non-border sample, the sum of absolute
/// differences to its eight neighbours. Border samples are absent, so the
/// map is (width-2) x (height-2).
struct ComplexityMap {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<double> values;

    double mean() const noexcept;
};

ComplexityMap complexity_map(const CoeffGrid& grid);
ComplexityMap complexity_map(const GrayImage& image);

/// Mean pixel complexity over the block interior. Neighbourhoods never reach
/// outside the block.
double block_complexity(const CoeffGrid& block);

/// Mean pixel complexity over all non-border pixels of the image.
double image_mean_complexity(const GrayImage& image);

/// Population statistics of per-image mean complexities over a reference set.
struct DatasetStats {
    double mu_d = 0.0;
    double sigma_d = 0.0;
    std::size_t image_count = 0;
};

DatasetStats dataset_stats(std::span<const GrayImage> images);
DatasetStats dataset_stats_from_means(std::span<const double> image_means);

/// Inter-image strength: alpha0 when mu_i lies within one sigma_D of mu_D,
/// otherwise alpha0 scaled by mu_i / mu_D. A degenerate dataset (mu_D == 0)
/// or a perfectly flat image (mu_i == 0) yields alpha0.
double initial_alpha(double mu_i, const DatasetStats& stats, double alpha0);

struct StrengthParams {
    double alpha0_approx = 11.0;
    double alpha0_detail = 9.0;
    double scale = 1.1;  // S
    double lower = 0.5;  // T1
    double upper = 1.5;  // T2

    /// Throws InputError on alpha0 <= 0, S < 1, T1 outside (0,1] or T2 < 1.
    void validate() const;
};

/// State of the per-block strength recursion along one scan.
struct StrengthState {
    double alpha_initial = 0.0;  // alpha_i
    double alpha = 0.0;          // alpha_m for the most recent block
    double prev_complexity = 0.0;
};

inline constexpr double kComplexityEpsilon = 1e-9;

/// Relative complexity change between consecutive blocks. Two flat blocks
/// give 0; a flat predecessor uses kComplexityEpsilon as denominator.
double relative_complexity_change(double prev, double current) noexcept;

/// One step of the local-complexity-variation update. The result always
/// satisfies T1*alpha_i <= alpha <= T2*alpha_i.
StrengthState next_alpha(const StrengthState& state, double block_complexity, const StrengthParams& params);

}  // namespace lcvwm
