#include "lcvwm/error.hpp"
#include "lcvwm/filters.hpp"
#include "lcvwm/transforms.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <numbers>

namespace lcvwm {
namespace {

using test::random_grid;
using test::relative_rms;
using test::rms;

double energy(const CoeffGrid& g) {
    double s = 0.0;
    for (double v : g.values())
        s += v * v;
    return s;
}

TEST(Filters, Cdf97IsHalfbandPair) {
    const auto& f = cdf97();
    const auto& h = f.analysis_lowpass.taps;
    const auto& g = f.synthesis_lowpass.taps;
    std::vector<double> p(h.size() + g.size() - 1, 0.0);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            p[i + j] += h[i] * g[j];
    const std::size_t centre = p.size() / 2;
    for (std::size_t k = centre % 2; k < p.size(); k += 2)
        EXPECT_NEAR(p[k], k == centre ? 1.0 : 0.0, 1e-9) << "offset " << static_cast<long>(k - centre);
    double sum = 0.0;
    for (double t : h)
        sum += t;
    EXPECT_NEAR(sum, std::numbers::sqrt2, 1e-12);
}

TEST(Filters, ReflectIndexIsWholeSampleSymmetric) {
    EXPECT_EQ(reflect_index(-1, 5), 1u);
    EXPECT_EQ(reflect_index(-2, 5), 2u);
    EXPECT_EQ(reflect_index(5, 5), 3u);
    EXPECT_EQ(reflect_index(9, 5), 1u);
    EXPECT_EQ(reflect_index(3, 1), 0u);
}

TEST(Dct2, ConstantBlock) {
    const auto c = dct2(CoeffGrid(4, 4, 8.0));
    EXPECT_NEAR(c(0, 0), 32.0, 1e-12);
    for (std::size_t i = 1; i < c.size(); ++i)
        EXPECT_NEAR(c.values()[i], 0.0, 1e-12);
}

TEST(Dct2, DcOnlyInverse) {
    CoeffGrid y(4, 4, 0.0);
    y(0, 0) = 32.0;
    const auto x = idct2(y);
    for (double v : x.values())
        EXPECT_NEAR(v, 8.0, 1e-12);
    const auto zero = idct2(CoeffGrid(4, 4));
    for (double v : zero.values())
        EXPECT_EQ(v, 0.0);
}

TEST(Dct2, ParsevalAndRoundTrip) {
    for (std::size_t side : {4u, 8u, 16u, 5u}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto x = random_grid(side, side, seed, -100.0, 100.0);
            const auto y = dct2(x);
            EXPECT_NEAR(energy(y), energy(x), 1e-10 * energy(x));
            EXPECT_LT(rms(idct2(y) - x), 1e-10);
            EXPECT_LT(rms(dct2(idct2(x)) - x), 1e-10);
        }
    }
}

TEST(Dct2, RejectsNonSquare) { EXPECT_THROW(dct2(CoeffGrid(4, 3)), DimensionError); }

TEST(LaplacianPyramid, Shapes) {
    const auto lvl = lp_decompose(random_grid(512, 512, 1));
    EXPECT_EQ(lvl.approximate.width(), 256u);
    EXPECT_EQ(lvl.approximate.height(), 256u);
    EXPECT_EQ(lvl.bandpass.width(), 512u);
    EXPECT_EQ(lvl.bandpass.height(), 512u);
}

TEST(LaplacianPyramid, ConstantHasNoBandpass) {
    EXPECT_LT(rms(lp_decompose(CoeffGrid(64, 32, 117.0)).bandpass), 1e-10);
}

TEST(LaplacianPyramid, PerfectReconstruction) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto x = random_grid(128, 96, seed);
        const auto lvl = lp_decompose(x);
        EXPECT_LT(relative_rms(x, lp_reconstruct(lvl.approximate, lvl.bandpass)), 1e-12);
    }
}

TEST(LaplacianPyramid, RejectsOddSize) { EXPECT_THROW(lp_decompose(CoeffGrid(31, 32)), DimensionError); }

TEST(DirectionalFilterBank, ShapesAndReconstruction) {
    const auto x = random_grid(512, 512, 7, -50.0, 50.0);
    const auto bands = dfb_decompose(x);
    std::size_t samples = 0;
    for (const auto& b : bands) {
        EXPECT_EQ(b.width(), 256u);
        EXPECT_EQ(b.height(), 256u);
        samples += b.size();
    }
    EXPECT_EQ(samples, x.size());
    EXPECT_LT(relative_rms(x, dfb_reconstruct(bands)), 1e-12);
}

TEST(DirectionalFilterBank, RejectsSizeNotDivisibleByFour) {
    EXPECT_THROW(dfb_decompose(CoeffGrid(64, 66)), DimensionError);
}

// Peak orientation, in degrees [0, 180), of the magnitude spectrum of g.
// Angle 0 means variation along columns only (vertical stripes).
double peak_angle(const CoeffGrid& g) {
    const std::size_t n = g.width();
    std::vector<std::complex<double>> rows(n * n), full(n * n);
    const double w = -2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            std::complex<double> s = 0.0;
            for (std::size_t c = 0; c < n; ++c)
                s += g(r, c) * std::polar(1.0, w * static_cast<double>(k * c % n));
            rows[r * n + k] = s;
        }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            std::complex<double> s = 0.0;
            for (std::size_t r = 0; r < n; ++r)
                s += rows[r * n + l] * std::polar(1.0, w * static_cast<double>(k * r % n));
            full[k * n + l] = s;
        }
    double best = -1.0, angle = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            if (k == 0 && l == 0)
                continue;
            const double mag = std::abs(full[k * n + l]);
            if (mag > best) {
                best = mag;
                const double fy = k < n / 2 ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(n);
                const double fx = l < n / 2 ? static_cast<double>(l) : static_cast<double>(l) - static_cast<double>(n);
                angle = std::fmod(std::atan2(fy, fx) * 180.0 / std::numbers::pi + 360.0, 180.0);
            }
        }
    return angle;
}

TEST(DirectionalFilterBank, ImpulseResponsesCoverFourWedges) {
    constexpr std::size_t n = 64;
    for (std::size_t k = 0; k < 4; ++k) {
        DirectionalBands bands;
        for (auto& b : bands)
            b = CoeffGrid(n / 2, n / 2, 0.0);
        bands[k](n / 4, n / 4) = 1.0;
        const double angle = peak_angle(dfb_reconstruct(bands));
        EXPECT_GE(angle, 45.0 * static_cast<double>(k)) << "band " << k;
        EXPECT_LT(angle, 45.0 * static_cast<double>(k + 1)) << "band " << k;
    }
}

TEST(Contourlet, ShapesAndReconstruction) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto x = random_grid(512, 512, 100 + seed);
        const auto bands = ct_decompose(x);
        EXPECT_EQ(bands.approximate.width(), 256u);
        for (const auto& d : bands.details) {
            EXPECT_EQ(d.width(), 256u);
            EXPECT_EQ(d.height(), 256u);
        }
        EXPECT_LT(relative_rms(x, ct_reconstruct(bands)), 1e-6);
    }
}

TEST(Contourlet, ConstantImageHasNoDetail) {
    const auto bands = ct_decompose(GrayImage::filled(64, 64, 128));
    for (const auto& d : bands.details)
        EXPECT_LT(rms(d), 1e-9);
}

TEST(Contourlet, ZeroAndLinear) {
    SubbandSet zero{CoeffGrid(32, 32), {CoeffGrid(32, 32), CoeffGrid(32, 32), CoeffGrid(32, 32), CoeffGrid(32, 32)}};
    EXPECT_EQ(rms(ct_reconstruct(zero)), 0.0);

    auto random_set = [](std::uint64_t seed) {
        SubbandSet s;
        s.approximate = random_grid(32, 32, seed, -1.0, 1.0);
        for (std::size_t d = 0; d < 4; ++d)
            s.details[d] = random_grid(32, 32, seed * 10 + d, -1.0, 1.0);
        return s;
    };
    const auto a = random_set(1), b = random_set(2);
    SubbandSet sum{a.approximate + b.approximate, {}};
    for (std::size_t d = 0; d < 4; ++d)
        sum.details[d] = a.details[d] + b.details[d];
    EXPECT_LT(rms(ct_reconstruct(a) + ct_reconstruct(b) - ct_reconstruct(sum)), 1e-8);
}

TEST(Contourlet, RejectsMismatchedSubbands) {
    SubbandSet s{CoeffGrid(32, 32), {CoeffGrid(32, 32), CoeffGrid(32, 32), CoeffGrid(16, 16), CoeffGrid(32, 32)}};
    EXPECT_THROW(ct_reconstruct(s), DimensionError);
}

}  // namespace
}  // namespace lcvwm
