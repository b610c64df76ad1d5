#include "lcvwm/transforms.hpp"

#include "lcvwm/error.hpp"
#include "lcvwm/filters.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

namespace lcvwm {
namespace {

// Row-major N x N orthonormal DCT-II basis, cached per thread.
const std::vector<double>& dct_basis(std::size_t n) {
    thread_local std::unordered_map<std::size_t, std::vector<double>> cache;
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::vector<double> basis(n * n);
    const double nd = static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = (k == 0) ? std::sqrt(1.0 / nd) : std::sqrt(2.0 / nd);
        for (std::size_t i = 0; i < n; ++i)
            basis[k * n + i] =
                s * std::cos(std::numbers::pi * (2.0 * static_cast<double>(i) + 1.0) * static_cast<double>(k) /
                             (2.0 * nd));
    }
    return cache.emplace(n, std::move(basis)).first->second;
}

// out = A * X * B, with A and B given as callables returning matrix entries.
template <typename Left, typename Right>
CoeffGrid sandwich(const CoeffGrid& x, Left&& left, Right&& right) {
    const std::size_t n = x.width();
    CoeffGrid tmp(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                s += left(i, k) * x(k, j);
            tmp(i, j) = s;
        }
    CoeffGrid out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                s += tmp(i, k) * right(k, j);
            out(i, j) = s;
        }
    return out;
}

void require_square(const CoeffGrid& g) {
    if (g.width() != g.height() || g.width() == 0)
        throw DimensionError("DCT needs a non-empty square block, got " + std::to_string(g.width()) + "x" +
                             std::to_string(g.height()));
}

// Source index of every position in [-pad, n + pad) under whole-sample
// symmetric extension, offset by pad.
std::vector<std::size_t> reflect_table(std::size_t n, std::ptrdiff_t pad) {
    std::vector<std::size_t> idx(n + 2 * static_cast<std::size_t>(pad));
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = reflect_index(static_cast<std::ptrdiff_t>(i) - pad, n);
    return idx;
}

// 1-D symmetric filtering along rows (horizontal) with whole-sample symmetric
// extension, evaluated at output columns 0, step, 2*step, ...
CoeffGrid filter_rows(const CoeffGrid& in, const SymmetricFilter& f, std::size_t step) {
    const std::size_t w = in.width(), h = in.height();
    const std::size_t ow = (w + step - 1) / step;
    const auto r = f.radius();
    const auto idx = reflect_table(w, r);
    CoeffGrid out(ow, h);
    for (std::size_t y = 0; y < h; ++y) {
        const double* row = in.row(y);
        for (std::size_t ox = 0; ox < ow; ++ox) {
            const std::size_t* at = &idx[ox * step];  // at[k + r] is the source of offset k
            double s = 0.0;
            for (std::ptrdiff_t k = -r; k <= r; ++k)
                s += f[k] * row[at[k + r]];
            out(y, ox) = s;
        }
    }
    return out;
}

CoeffGrid filter_cols(const CoeffGrid& in, const SymmetricFilter& f, std::size_t step) {
    const std::size_t w = in.width(), h = in.height();
    const std::size_t oh = (h + step - 1) / step;
    const auto r = f.radius();
    const auto idx = reflect_table(h, r);
    CoeffGrid out(w, oh, 0.0);
    for (std::size_t oy = 0; oy < oh; ++oy) {
        double* dst = out.row(oy);
        for (std::ptrdiff_t k = -r; k <= r; ++k) {
            const double* src = in.row(idx[oy * step + static_cast<std::size_t>(k + r)]);
            const double fk = f[k];
            for (std::size_t x = 0; x < w; ++x)
                dst[x] += fk * src[x];
        }
    }
    return out;
}

// Filtering of the 2x zero-stuffed signal without forming it. Reflection
// preserves parity, so only taps with (x + k) even hit a stored sample.
CoeffGrid upsample_rows(const CoeffGrid& in, const SymmetricFilter& f) {
    const std::size_t w = 2 * in.width(), h = in.height();
    const auto r = f.radius();
    const auto idx = reflect_table(w, r);
    CoeffGrid out(w, h);
    for (std::size_t y = 0; y < h; ++y) {
        const double* row = in.row(y);
        for (std::size_t x = 0; x < w; ++x) {
            double s = 0.0;
            for (std::ptrdiff_t k = -r + static_cast<std::ptrdiff_t>((x + static_cast<std::size_t>(r)) & 1U); k <= r;
                 k += 2)
                s += f[k] * row[idx[x + static_cast<std::size_t>(k + r)] / 2];
            out(y, x) = s;
        }
    }
    return out;
}

CoeffGrid upsample_cols(const CoeffGrid& in, const SymmetricFilter& f) {
    const std::size_t w = in.width(), h = 2 * in.height();
    const auto r = f.radius();
    const auto idx = reflect_table(h, r);
    CoeffGrid out(w, h, 0.0);
    for (std::size_t y = 0; y < h; ++y) {
        double* dst = out.row(y);
        for (std::ptrdiff_t k = -r + static_cast<std::ptrdiff_t>((y + static_cast<std::size_t>(r)) & 1U); k <= r;
             k += 2) {
            const double* src = in.row(idx[y + static_cast<std::size_t>(k + r)] / 2);
            const double fk = f[k];
            for (std::size_t x = 0; x < w; ++x)
                dst[x] += fk * src[x];
        }
    }
    return out;
}

// --- lifting-based directional filter bank ---------------------------------
//
// Level 1 is a two-channel quincunx fan filter bank: the samples with odd
// (row + col) parity are the highpass channel and are predicted from their
// four axial neighbours, which all have even parity. The neighbour weights
// are +1/2 horizontally and -1/2 vertically, i.e. the diamond 9/7 lifting
// modulated by (-1)^row, so the two channels split the spectrum into the
// horizontal and vertical fans.
//
// Level 2 runs the same lifting on each quincunx sublattice using the four
// diagonal neighbours (weights +1/2 on the main diagonal, -1/2 on the
// anti-diagonal), which splits each fan into two wedges. Odd rows are the
// highpass samples of both sublattices. Each of the four 2x2 cosets of the
// result is one directional subband.
//
// Whole-sample reflection preserves row and column parity, so every lifting
// step reads only from the opposite channel and is exactly invertible.

struct Stencil {
    std::array<std::ptrdiff_t, 4> dr;
    std::array<std::ptrdiff_t, 4> dc;
    std::array<double, 4> w;
};

constexpr Stencil kFanStencil{{-1, 1, 0, 0}, {0, 0, -1, 1}, {-0.5, -0.5, 0.5, 0.5}};
constexpr Stencil kDiagonalStencil{{-1, 1, -1, 1}, {-1, 1, 1, -1}, {0.5, 0.5, -0.5, -0.5}};

template <typename Select>
void lift_step(CoeffGrid& g, const Stencil& s, double coeff, Select&& is_target) {
    const std::size_t h = g.height(), w = g.width();
    // Targets and sources are disjoint, so in-place update is safe. Along a
    // row the targets are either every sample or every other one.
    for (std::size_t r = 0; r < h; ++r) {
        const bool t0 = is_target(r, 0), t1 = is_target(r, 1);
        if (!t0 && !t1)
            continue;
        std::array<const double*, 4> src;
        for (std::size_t k = 0; k < 4; ++k)
            src[k] = g.row(reflect_index(static_cast<std::ptrdiff_t>(r) + s.dr[k], h));
        double* dst = g.row(r);
        const std::size_t step = t0 && t1 ? 1 : 2;
        for (std::size_t c = t0 ? 0 : 1; c < w; c += step) {
            double acc = 0.0;
            if (c > 0 && c + 1 < w) {
                for (std::size_t k = 0; k < 4; ++k)
                    acc += s.w[k] * src[k][static_cast<std::ptrdiff_t>(c) + s.dc[k]];
            } else {
                for (std::size_t k = 0; k < 4; ++k)
                    acc += s.w[k] * src[k][reflect_index(static_cast<std::ptrdiff_t>(c) + s.dc[k], w)];
            }
            dst[c] += coeff * acc;
        }
    }
}

template <typename IsHigh>
void lifting_forward(CoeffGrid& g, const Stencil& s, IsHigh&& is_high) {
    const auto& l = kCdf97Lifting;
    auto high = [&](std::size_t r, std::size_t c) { return is_high(r, c); };
    auto low = [&](std::size_t r, std::size_t c) { return !is_high(r, c); };
    lift_step(g, s, l.predict1, high);
    lift_step(g, s, l.update1, low);
    lift_step(g, s, l.predict2, high);
    lift_step(g, s, l.update2, low);
    for (std::size_t r = 0; r < g.height(); ++r)
        for (std::size_t c = 0; c < g.width(); ++c)
            g(r, c) = is_high(r, c) ? g(r, c) / l.scale : g(r, c) * l.scale;
}

template <typename IsHigh>
void lifting_inverse(CoeffGrid& g, const Stencil& s, IsHigh&& is_high) {
    const auto& l = kCdf97Lifting;
    auto high = [&](std::size_t r, std::size_t c) { return is_high(r, c); };
    auto low = [&](std::size_t r, std::size_t c) { return !is_high(r, c); };
    for (std::size_t r = 0; r < g.height(); ++r)
        for (std::size_t c = 0; c < g.width(); ++c)
            g(r, c) = is_high(r, c) ? g(r, c) * l.scale : g(r, c) / l.scale;
    lift_step(g, s, -l.update2, low);
    lift_step(g, s, -l.predict2, high);
    lift_step(g, s, -l.update1, low);
    lift_step(g, s, -l.predict1, high);
}

bool fan_high(std::size_t r, std::size_t c) { return ((r + c) & 1U) != 0; }
bool wedge_high(std::size_t r, std::size_t) { return (r & 1U) != 0; }

// Coset (row parity, col parity) of each output band, ordered by wedge angle.
constexpr std::array<std::array<std::size_t, 2>, 4> kBandCosets{{{1, 0}, {1, 1}, {0, 0}, {0, 1}}};

}  // namespace

CoeffGrid dct2(const CoeffGrid& block) {
    require_square(block);
    const std::size_t n = block.width();
    const auto& b = dct_basis(n);
    return sandwich(
        block, [&](std::size_t i, std::size_t k) { return b[i * n + k]; },
        [&](std::size_t k, std::size_t j) { return b[j * n + k]; });
}

CoeffGrid idct2(const CoeffGrid& coeffs) {
    require_square(coeffs);
    const std::size_t n = coeffs.width();
    const auto& b = dct_basis(n);
    return sandwich(
        coeffs, [&](std::size_t i, std::size_t k) { return b[k * n + i]; },
        [&](std::size_t k, std::size_t j) { return b[k * n + j]; });
}

PyramidLevel lp_decompose(const CoeffGrid& image) {
    require_divisible(image.width(), image.height(), 2, "Laplacian pyramid");
    const auto& h = cdf97().analysis_lowpass;
    CoeffGrid approx = filter_cols(filter_rows(image, h, 2), h, 2);
    CoeffGrid bandpass = image - lp_predict(approx);
    return {std::move(approx), std::move(bandpass)};
}

CoeffGrid lp_predict(const CoeffGrid& approximate) {
    const auto& g = cdf97().synthesis_lowpass;
    return upsample_cols(upsample_rows(approximate, g), g);
}

CoeffGrid lp_reconstruct(const CoeffGrid& approximate, const CoeffGrid& bandpass) {
    if (bandpass.width() != 2 * approximate.width() || bandpass.height() != 2 * approximate.height())
        throw DimensionError("bandpass must be twice the size of the approximate scale");
    return lp_predict(approximate) + bandpass;
}

DirectionalBands dfb_decompose(const CoeffGrid& bandpass) {
    require_divisible(bandpass.width(), bandpass.height(), 4, "directional filter bank");
    CoeffGrid g = bandpass;
    lifting_forward(g, kFanStencil, fan_high);
    lifting_forward(g, kDiagonalStencil, wedge_high);

    const std::size_t hw = g.width() / 2, hh = g.height() / 2;
    DirectionalBands bands;
    for (std::size_t k = 0; k < 4; ++k) {
        const auto [pr, pc] = kBandCosets[k];
        CoeffGrid band(hw, hh);
        for (std::size_t r = 0; r < hh; ++r)
            for (std::size_t c = 0; c < hw; ++c)
                band(r, c) = g(2 * r + pr, 2 * c + pc);
        bands[k] = std::move(band);
    }
    return bands;
}

CoeffGrid dfb_reconstruct(const DirectionalBands& bands) {
    const std::size_t hw = bands[0].width(), hh = bands[0].height();
    for (const auto& b : bands)
        if (b.width() != hw || b.height() != hh || hw == 0 || hh == 0)
            throw DimensionError("directional subbands must be non-empty and equally sized");
    require_divisible(2 * hw, 2 * hh, 4, "directional filter bank");

    CoeffGrid g(2 * hw, 2 * hh);
    for (std::size_t k = 0; k < 4; ++k) {
        const auto [pr, pc] = kBandCosets[k];
        for (std::size_t r = 0; r < hh; ++r)
            for (std::size_t c = 0; c < hw; ++c)
                g(2 * r + pr, 2 * c + pc) = bands[k](r, c);
    }
    lifting_inverse(g, kDiagonalStencil, wedge_high);
    lifting_inverse(g, kFanStencil, fan_high);
    return g;
}

SubbandSet ct_decompose(const CoeffGrid& image) {
    require_divisible(image.width(), image.height(), 4, "contourlet decomposition");
    auto level = lp_decompose(image);
    return {std::move(level.approximate), dfb_decompose(level.bandpass)};
}

SubbandSet ct_decompose(const GrayImage& image) {
    return ct_decompose(to_coeffs(image));
}

CoeffGrid ct_reconstruct(const SubbandSet& subbands) {
    for (const auto& d : subbands.details)
        if (!d.same_shape(subbands.approximate))
            throw DimensionError("detail subbands must match the approximate scale");
    return lp_reconstruct(subbands.approximate, dfb_reconstruct(subbands.details));
}

}  // namespace lcvwm
