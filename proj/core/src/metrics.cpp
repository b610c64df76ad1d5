#include "lcvwm/metrics.hpp"

#include "lcvwm/error.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace lcvwm {
namespace {

void require_same_shape(const GrayImage& a, const GrayImage& b) {
    if (a.width() != b.width() || a.height() != b.height())
        throw InputError("images differ in size");
}

constexpr int kWindow = 11;

std::array<double, kWindow> gaussian_window() {
    std::array<double, kWindow> w{};
    double sum = 0.0;
    for (int i = 0; i < kWindow; ++i) {
        const double x = i - kWindow / 2;
        w[static_cast<std::size_t>(i)] = std::exp(-x * x / (2.0 * 1.5 * 1.5));
        sum += w[static_cast<std::size_t>(i)];
    }
    for (auto& v : w)
        v /= sum;
    return w;
}

// Separable 'valid' Gaussian filtering of a real field.
std::vector<double> filter_valid(const std::vector<double>& in, std::size_t w, std::size_t h) {
    static const auto g = gaussian_window();
    const std::size_t ow = w - kWindow + 1, oh = h - kWindow + 1;
    std::vector<double> tmp(ow * h);
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < ow; ++x) {
            double s = 0.0;
            for (std::size_t k = 0; k < kWindow; ++k)
                s += g[k] * in[y * w + x + k];
            tmp[y * ow + x] = s;
        }
    std::vector<double> out(ow * oh);
    for (std::size_t y = 0; y < oh; ++y)
        for (std::size_t x = 0; x < ow; ++x) {
            double s = 0.0;
            for (std::size_t k = 0; k < kWindow; ++k)
                s += g[k] * tmp[(y + k) * ow + x];
            out[y * ow + x] = s;
        }
    return out;
}

}  // namespace

double psnr(const GrayImage& a, const GrayImage& b) {
    require_same_shape(a, b);
    const auto sa = a.samples(), sb = b.samples();
    double sse = 0.0;
    for (std::size_t i = 0; i < sa.size(); ++i) {
        const double d = static_cast<double>(sa[i]) - static_cast<double>(sb[i]);
        sse += d * d;
    }
    if (sse == 0.0)
        return std::numeric_limits<double>::infinity();
    const double mse = sse / static_cast<double>(sa.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double ssim(const GrayImage& a, const GrayImage& b) {
    require_same_shape(a, b);
    const std::size_t w = a.width(), h = a.height();
    if (w < kWindow || h < kWindow)
        throw InputError("SSIM needs images of at least 11x11");

    const std::size_t n = w * h;
    std::vector<double> x(n), y(n), xx(n), yy(n), xy(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = a.samples()[i];
        y[i] = b.samples()[i];
        xx[i] = x[i] * x[i];
        yy[i] = y[i] * y[i];
        xy[i] = x[i] * y[i];
    }
    const auto mx = filter_valid(x, w, h), my = filter_valid(y, w, h);
    const auto sxx = filter_valid(xx, w, h), syy = filter_valid(yy, w, h), sxy = filter_valid(xy, w, h);

    constexpr double c1 = (0.01 * 255.0) * (0.01 * 255.0);
    constexpr double c2 = (0.03 * 255.0) * (0.03 * 255.0);
    double total = 0.0;
    for (std::size_t i = 0; i < mx.size(); ++i) {
        const double vx = sxx[i] - mx[i] * mx[i];
        const double vy = syy[i] - my[i] * my[i];
        const double cov = sxy[i] - mx[i] * my[i];
        total += ((2.0 * mx[i] * my[i] + c1) * (2.0 * cov + c2)) /
                 ((mx[i] * mx[i] + my[i] * my[i] + c1) * (vx + vy + c2));
    }
    return total / static_cast<double>(mx.size());
}

SimilarityResult similarity(const Watermark& original, const Watermark& extracted) {
    if (original.size() != extracted.size())
        throw InputError("watermark lengths differ");
    if (original.size() == 0)
        throw InputError("empty watermark");
    std::size_t mismatches = 0, dot = 0, ones_a = 0, ones_b = 0;
    for (std::size_t i = 0; i < original.size(); ++i) {
        const unsigned p = original.bits[i], q = extracted.bits[i];
        mismatches += (p != q);
        dot += p * q;
        ones_a += p;
        ones_b += q;
    }
    SimilarityResult r;
    r.ber = static_cast<double>(mismatches) / static_cast<double>(original.size());
    if (ones_a == 0 && ones_b == 0)
        r.nc = 1.0;
    else if (ones_a == 0 || ones_b == 0)
        r.nc = 0.0;
    else
        r.nc = static_cast<double>(dot) / std::sqrt(static_cast<double>(ones_a) * static_cast<double>(ones_b));
    return r;
}

}  // namespace lcvwm
