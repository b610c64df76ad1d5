#include "lcvwm/complexity.hpp"

#include "lcvwm/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lcvwm {
namespace {

template <typename Sample>
ComplexityMap complexity_of(std::size_t width, std::size_t height, Sample&& sample) {
    if (width < 3 || height < 3)
        throw DimensionError("complexity needs at least a 3x3 grid");
    ComplexityMap map{width - 2, height - 2, {}};
    map.values.resize(map.width * map.height);
    for (std::size_t r = 1; r + 1 < height; ++r) {
        for (std::size_t c = 1; c + 1 < width; ++c) {
            const double centre = sample(r, c);
            double sum = 0.0;
            for (std::size_t rr = r - 1; rr <= r + 1; ++rr)
                for (std::size_t cc = c - 1; cc <= c + 1; ++cc)
                    sum += std::abs(centre - sample(rr, cc));
            map.values[(r - 1) * map.width + (c - 1)] = sum;
        }
    }
    return map;
}

}  // namespace

double ComplexityMap::mean() const noexcept {
    if (values.empty())
        return 0.0;
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

ComplexityMap complexity_map(const CoeffGrid& grid) {
    return complexity_of(grid.width(), grid.height(),
                         [&](std::size_t r, std::size_t c) { return grid(r, c); });
}

ComplexityMap complexity_map(const GrayImage& image) {
    return complexity_of(image.width(), image.height(),
                         [&](std::size_t r, std::size_t c) { return static_cast<double>(image(r, c)); });
}

double block_complexity(const CoeffGrid& block) {
    return complexity_map(block).mean();
}

double image_mean_complexity(const GrayImage& image) {
    return complexity_map(image).mean();
}

DatasetStats dataset_stats_from_means(std::span<const double> image_means) {
    if (image_means.empty())
        throw InputError("dataset statistics need at least one image");
    const double n = static_cast<double>(image_means.size());
    const double mu = std::accumulate(image_means.begin(), image_means.end(), 0.0) / n;
    double var = 0.0;
    for (double m : image_means)
        var += (m - mu) * (m - mu);
    return {mu, std::sqrt(var / n), image_means.size()};
}

DatasetStats dataset_stats(std::span<const GrayImage> images) {
    std::vector<double> means;
    means.reserve(images.size());
    for (const auto& img : images)
        means.push_back(image_mean_complexity(img));
    return dataset_stats_from_means(means);
}

double initial_alpha(double mu_i, const DatasetStats& stats, double alpha0) {
    // A flat image would get alpha_i = 0 and carry no watermark at all.
    if (stats.mu_d <= 0.0 || mu_i <= kComplexityEpsilon)
        return alpha0;
    if (std::abs(mu_i - stats.mu_d) <= stats.sigma_d)
        return alpha0;
    return alpha0 * (mu_i / stats.mu_d);
}

void StrengthParams::validate() const {
    if (!(alpha0_approx > 0.0) || !(alpha0_detail > 0.0))
        throw InputError("alpha0 must be positive");
    if (!(scale >= 1.0))
        throw InputError("S must be >= 1");
    if (!(lower > 0.0 && lower <= 1.0))
        throw InputError("T1 must lie in (0, 1]");
    if (!(upper >= 1.0))
        throw InputError("T2 must be >= 1");
}

double relative_complexity_change(double prev, double current) noexcept {
    if (prev <= kComplexityEpsilon && current <= kComplexityEpsilon)
        return 0.0;
    return (current - prev) / std::max(prev, kComplexityEpsilon);
}

StrengthState next_alpha(const StrengthState& state, double block_complexity, const StrengthParams& params) {
    const double gamma = relative_complexity_change(state.prev_complexity, block_complexity);
    const double floor = params.lower * state.alpha_initial;
    const double ceiling = params.upper * state.alpha_initial;

    double alpha;
    if (gamma < 0.0)
        alpha = std::max((1.0 + gamma) * state.alpha / params.scale, floor);
    else
        alpha = std::min(params.scale * (1.0 + gamma) * state.alpha, ceiling);

    // The recursion only clamps one side per branch; an earlier state outside
    // the band (e.g. after a parameter change) is pulled back here.
    alpha = std::clamp(alpha, floor, ceiling);
    return {state.alpha_initial, alpha, block_complexity};
}

}  // namespace lcvwm
