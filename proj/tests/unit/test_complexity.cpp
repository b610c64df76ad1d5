#include "lcvwm/complexity.hpp"
#include "lcvwm/error.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <random>

namespace lcvwm {
namespace {

CoeffGrid centre_spike() {
    CoeffGrid g(3, 3, 0.0);
    g(1, 1) = 10.0;
    return g;
}

CoeffGrid checkerboard(std::size_t n) {
    CoeffGrid g(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            g(r, c) = (r + c) % 2 == 0 ? 0.0 : 255.0;
    return g;
}

TEST(ComplexityMap, ConstantGridIsZero) {
    const auto m = complexity_map(CoeffGrid(3, 3, 7.0));
    ASSERT_EQ(m.values.size(), 1u);
    EXPECT_EQ(m.values[0], 0.0);
}

TEST(ComplexityMap, CentreSpike) {
    const auto m = complexity_map(centre_spike());
    ASSERT_EQ(m.values.size(), 1u);
    EXPECT_DOUBLE_EQ(m.values[0], 80.0);
}

TEST(ComplexityMap, ShiftInvariant) {
    const auto g = test::random_grid(16, 12, 3);
    CoeffGrid shifted = g;
    for (auto& v : shifted.values())
        v += 42.5;
    const auto a = complexity_map(g), b = complexity_map(shifted);
    for (std::size_t i = 0; i < a.values.size(); ++i)
        EXPECT_NEAR(a.values[i], b.values[i], 1e-9);
}

TEST(ComplexityMap, TooSmallGridThrows) { EXPECT_THROW(complexity_map(CoeffGrid(2, 5)), DimensionError); }

TEST(BlockComplexity, ConstantBlock) { EXPECT_EQ(block_complexity(CoeffGrid(4, 4, 3.0)), 0.0); }

TEST(BlockComplexity, Homogeneous) {
    const auto g = test::random_grid(8, 8, 4);
    CoeffGrid scaled = g * 2.5;
    EXPECT_NEAR(block_complexity(scaled), 2.5 * block_complexity(g), 1e-9);
}

// Only the four axial neighbours of a checkerboard sample differ; the
// diagonal ones share its colour.
TEST(BlockComplexity, Checkerboard) { EXPECT_DOUBLE_EQ(block_complexity(checkerboard(16)), 4.0 * 255.0); }

TEST(BlockComplexity, CheckerboardBeatsGradientWithSameHistogram) {
    // Row gradient: top half 0, bottom half 255, same two-value histogram.
    CoeffGrid gradient(8, 8);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c)
            gradient(r, c) = r < 4 ? 0.0 : 255.0;
    EXPECT_GT(block_complexity(checkerboard(8)), block_complexity(gradient));
}

TEST(ImageComplexity, ConstantAndMirror) {
    EXPECT_EQ(image_mean_complexity(GrayImage::filled(16, 16, 90)), 0.0);
    const auto img = test::random_image(20, 13, 6);
    std::vector<std::uint8_t> mirrored(img.samples().size());
    for (std::size_t r = 0; r < img.height(); ++r)
        for (std::size_t c = 0; c < img.width(); ++c)
            mirrored[r * img.width() + (img.width() - 1 - c)] = img(r, c);
    EXPECT_NEAR(image_mean_complexity(img), image_mean_complexity(GrayImage(20, 13, mirrored)), 1e-9);
}

TEST(ImageComplexity, SinglePixelSpike) {
    GrayImage img(3, 3, {0, 0, 0, 0, 10, 0, 0, 0, 0});
    EXPECT_DOUBLE_EQ(image_mean_complexity(img), 80.0);
}

TEST(DatasetStats, SingleImage) {
    const std::vector<double> means{12.5};
    const auto s = dataset_stats_from_means(means);
    EXPECT_DOUBLE_EQ(s.mu_d, 12.5);
    EXPECT_DOUBLE_EQ(s.sigma_d, 0.0);
    EXPECT_EQ(s.image_count, 1u);
}

TEST(DatasetStats, PopulationDeviation) {
    const std::vector<double> means{10.0, 20.0};
    const auto s = dataset_stats_from_means(means);
    EXPECT_DOUBLE_EQ(s.mu_d, 15.0);
    EXPECT_DOUBLE_EQ(s.sigma_d, 5.0);
}

TEST(DatasetStats, ConstantImages) {
    const std::vector<GrayImage> imgs{GrayImage::filled(8, 8, 0), GrayImage::filled(8, 8, 200)};
    const auto s = dataset_stats(imgs);
    EXPECT_EQ(s.mu_d, 0.0);
    EXPECT_EQ(s.sigma_d, 0.0);
}

TEST(DatasetStats, EmptyThrows) { EXPECT_THROW(dataset_stats_from_means({}), InputError); }

TEST(InitialAlpha, TableRule) {
    const DatasetStats s{100.0, 20.0, 10};
    EXPECT_DOUBLE_EQ(initial_alpha(100.0, s, 11.0), 11.0);
    EXPECT_DOUBLE_EQ(initial_alpha(150.0, s, 11.0), 16.5);
    EXPECT_DOUBLE_EQ(initial_alpha(50.0, s, 11.0), 5.5);
    EXPECT_DOUBLE_EQ(initial_alpha(120.0, s, 11.0), 11.0);  // boundary is inclusive
    EXPECT_DOUBLE_EQ(initial_alpha(5.0, DatasetStats{0.0, 0.0, 3}, 11.0), 11.0);
    EXPECT_DOUBLE_EQ(initial_alpha(0.0, s, 11.0), 11.0);
}

TEST(NextAlpha, HandEvaluatedSteps) {
    const StrengthParams p;
    StrengthState s{11.0, 11.0, 10.0};
    EXPECT_NEAR(next_alpha(s, 13.0, p).alpha, 15.73, 1e-12);
    EXPECT_DOUBLE_EQ(next_alpha(s, 5.0, p).alpha, 5.5);
    EXPECT_NEAR(next_alpha(s, 10.0, p).alpha, 12.1, 1e-12);
    EXPECT_DOUBLE_EQ(next_alpha(s, 13.0, p).prev_complexity, 13.0);
}

TEST(NextAlpha, GammaGuard) {
    EXPECT_EQ(relative_complexity_change(0.0, 0.0), 0.0);
    EXPECT_GT(relative_complexity_change(0.0, 1.0), 1e6);
    const StrengthParams p;
    const auto s = next_alpha({11.0, 11.0, 0.0}, 4.0, p);
    EXPECT_TRUE(std::isfinite(s.alpha));
    EXPECT_DOUBLE_EQ(s.alpha, 16.5);
    EXPECT_NEAR(next_alpha({11.0, 11.0, 0.0}, 0.0, p).alpha, 12.1, 1e-12);
}

TEST(NextAlpha, RandomSequencesStayInBand) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int seq = 0; seq < 10000; ++seq) {
        StrengthParams p;
        p.scale = 1.0 + unit(rng);
        p.lower = 0.05 + 0.95 * unit(rng);
        p.upper = 1.0 + 3.0 * unit(rng);
        const double ai = 0.1 + 30.0 * unit(rng);
        StrengthState s{ai, ai, 100.0 * unit(rng)};
        for (int m = 0; m < 64; ++m) {
            const double c = unit(rng) < 0.1 ? 0.0 : 500.0 * unit(rng) * unit(rng);
            s = next_alpha(s, c, p);
            ASSERT_GE(s.alpha, p.lower * ai - 1e-12);
            ASSERT_LE(s.alpha, p.upper * ai + 1e-12);
        }
    }
}

TEST(NextAlpha, MonotoneInGamma) {
    const StrengthParams p;
    for (double prev_alpha : {5.5, 8.0, 11.0, 14.0, 16.5}) {
        double last = 0.0;
        for (double c = 0.0; c <= 40.0; c += 0.05) {
            const double a = next_alpha({11.0, prev_alpha, 10.0}, c, p).alpha;
            EXPECT_GE(a, last - 1e-12);
            last = a;
        }
    }
}

TEST(StrengthParams, Validate) {
    StrengthParams p;
    EXPECT_NO_THROW(p.validate());
    p.scale = 0.9;
    EXPECT_THROW(p.validate(), InputError);
    p = {};
    p.lower = 1.5;
    EXPECT_THROW(p.validate(), InputError);
    p = {};
    p.alpha0_detail = 0.0;
    EXPECT_THROW(p.validate(), InputError);
}

}  // namespace
}  // namespace lcvwm
