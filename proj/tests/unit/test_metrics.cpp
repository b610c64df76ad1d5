#include "lcvwm/error.hpp"
#include "lcvwm/metrics.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <limits>

namespace lcvwm {
namespace {

TEST(Psnr, Identical) {
    const auto img = test::random_image(16, 16, 1);
    EXPECT_EQ(psnr(img, img), std::numeric_limits<double>::infinity());
}

TEST(Psnr, OffByOne) {
    EXPECT_NEAR(psnr(GrayImage::filled(8, 8, 10), GrayImage::filled(8, 8, 11)), 48.1308, 1e-4);
}

TEST(Psnr, Extremes) { EXPECT_NEAR(psnr(GrayImage::filled(8, 8, 0), GrayImage::filled(8, 8, 255)), 0.0, 1e-12); }

TEST(Psnr, SizeMismatch) {
    EXPECT_THROW(psnr(GrayImage::filled(8, 8, 0), GrayImage::filled(8, 9, 0)), InputError);
}

TEST(Ssim, Identical) {
    const auto img = test::random_image(32, 32, 2);
    EXPECT_NEAR(ssim(img, img), 1.0, 1e-12);
}

TEST(Ssim, ConstantClosedForm) {
    const double c1 = (0.01 * 255.0) * (0.01 * 255.0);
    EXPECT_NEAR(ssim(GrayImage::filled(16, 16, 0), GrayImage::filled(16, 16, 255)), c1 / (255.0 * 255.0 + c1), 1e-9);
}

TEST(Ssim, SymmetricAndBounded) {
    const auto a = test::synthetic_image(40, 40, 1), b = test::random_image(40, 40, 3);
    EXPECT_NEAR(ssim(a, b), ssim(b, a), 1e-12);
    EXPECT_LT(ssim(a, b), 0.5);
    EXPECT_THROW(ssim(GrayImage::filled(10, 10, 0), GrayImage::filled(10, 10, 0)), InputError);
}

TEST(Similarity, Cases) {
    const Watermark w{{1, 0, 1, 1, 0, 0, 1, 0}};
    auto r = similarity(w, w);
    EXPECT_DOUBLE_EQ(r.nc, 1.0);
    EXPECT_DOUBLE_EQ(r.ber, 0.0);

    Watermark inv = w;
    for (auto& b : inv.bits)
        b ^= 1;
    EXPECT_DOUBLE_EQ(similarity(w, inv).ber, 1.0);
    EXPECT_DOUBLE_EQ(similarity(w, inv).nc, 0.0);

    Watermark half = w;
    for (std::size_t i = 0; i < 4; ++i)
        half.bits[i] ^= 1;
    EXPECT_DOUBLE_EQ(similarity(w, half).ber, 0.5);
}

TEST(Similarity, ZeroStreams) {
    const Watermark zeros{{0, 0, 0, 0}};
    EXPECT_DOUBLE_EQ(similarity(zeros, zeros).nc, 1.0);
    EXPECT_DOUBLE_EQ(similarity(zeros, Watermark{{1, 0, 0, 0}}).nc, 0.0);
    EXPECT_THROW(similarity(zeros, Watermark{{0, 0}}), InputError);
}

}  // namespace
}  // namespace lcvwm
