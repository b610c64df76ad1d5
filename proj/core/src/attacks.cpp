#include "lcvwm/attacks.hpp"

#include "lcvwm/error.hpp"
#include "lcvwm/filters.hpp"
#include "lcvwm/jpeg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>

namespace lcvwm {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::uint8_t to_pixel(double v) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
}

GrayImage map_pixels(const GrayImage& in, auto&& fn) {
    std::vector<std::uint8_t> out(in.samples().size());
    std::transform(in.samples().begin(), in.samples().end(), out.begin(), fn);
    return GrayImage(in.width(), in.height(), std::move(out));
}

// --- geometry ---------------------------------------------------------------

double bilinear(const GrayImage& img, double y, double x, double fill) {
    // A pixel covers [i - 0.5, i + 0.5]; samples inside the image area but
    // beyond the outermost centres are clamped to the edge.
    const double h = static_cast<double>(img.height()), w = static_cast<double>(img.width());
    if (y < -0.5 || x < -0.5 || y > h - 0.5 || x > w - 0.5)
        return fill;
    y = std::clamp(y, 0.0, h - 1.0);
    x = std::clamp(x, 0.0, w - 1.0);
    const auto y0 = static_cast<std::size_t>(std::floor(y));
    const auto x0 = static_cast<std::size_t>(std::floor(x));
    const std::size_t y1 = std::min(y0 + 1, img.height() - 1);
    const std::size_t x1 = std::min(x0 + 1, img.width() - 1);
    const double fy = y - static_cast<double>(y0), fx = x - static_cast<double>(x0);
    const double top = (1.0 - fx) * img(y0, x0) + fx * img(y0, x1);
    const double bottom = (1.0 - fx) * img(y1, x0) + fx * img(y1, x1);
    return (1.0 - fy) * top + fy * bottom;
}

// Uncovered corners are filled with black.
GrayImage rotate_once(const GrayImage& img, double degrees) {
    const double t = degrees * std::numbers::pi / 180.0;
    const double ct = std::cos(t), st = std::sin(t);
    const double cy = (static_cast<double>(img.height()) - 1.0) / 2.0;
    const double cx = (static_cast<double>(img.width()) - 1.0) / 2.0;
    std::vector<std::uint8_t> out(img.samples().size());
    for (std::size_t r = 0; r < img.height(); ++r)
        for (std::size_t c = 0; c < img.width(); ++c) {
            const double dy = static_cast<double>(r) - cy, dx = static_cast<double>(c) - cx;
            // Inverse mapping: output pixel looks up the source rotated by -t.
            const double sx = ct * dx + st * dy + cx;
            const double sy = -st * dx + ct * dy + cy;
            out[r * img.width() + c] = to_pixel(bilinear(img, sy, sx, 0.0));
        }
    return GrayImage(img.width(), img.height(), std::move(out));
}

struct Tap {
    std::size_t index;
    double weight;
};

// Bilinear weights for one axis with pixel-centre alignment and replicated
// edges. No antialiasing prefilter when shrinking.
std::vector<std::vector<Tap>> resample_weights(std::size_t in_n, std::size_t out_n) {
    const double scale = static_cast<double>(out_n) / static_cast<double>(in_n);
    const double width = 1.0;
    std::vector<std::vector<Tap>> taps(out_n);
    for (std::size_t i = 0; i < out_n; ++i) {
        const double centre = (static_cast<double>(i) + 0.5) / scale - 0.5;
        const auto lo = static_cast<std::ptrdiff_t>(std::floor(centre - width));
        const auto hi = static_cast<std::ptrdiff_t>(std::ceil(centre + width));
        double sum = 0.0;
        for (std::ptrdiff_t k = lo; k <= hi; ++k) {
            const double wgt = std::max(0.0, 1.0 - std::abs(centre - static_cast<double>(k)) / width);
            if (wgt <= 0.0)
                continue;
            const auto idx = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(k, 0, static_cast<std::ptrdiff_t>(in_n) - 1));
            taps[i].push_back({idx, wgt});
            sum += wgt;
        }
        for (auto& tp : taps[i])
            tp.weight /= sum;
    }
    return taps;
}

GrayImage resize_to(const GrayImage& img, std::size_t out_w, std::size_t out_h) {
    const auto wx = resample_weights(img.width(), out_w);
    const auto wy = resample_weights(img.height(), out_h);
    std::vector<double> tmp(out_w * img.height());
    for (std::size_t r = 0; r < img.height(); ++r)
        for (std::size_t c = 0; c < out_w; ++c) {
            double s = 0.0;
            for (const auto& tp : wx[c])
                s += tp.weight * img(r, tp.index);
            tmp[r * out_w + c] = s;
        }
    std::vector<std::uint8_t> out(out_w * out_h);
    for (std::size_t r = 0; r < out_h; ++r)
        for (std::size_t c = 0; c < out_w; ++c) {
            double s = 0.0;
            for (const auto& tp : wy[r])
                s += tp.weight * tmp[tp.index * out_w + c];
            out[r * out_w + c] = to_pixel(s);
        }
    return GrayImage(out_w, out_h, std::move(out));
}

// --- noise ------------------------------------------------------------------

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

GrayImage gaussian_noise(const GrayImage& img, const attack::GaussianNoise& a) {
    std::mt19937_64 rng(a.seed);
    const double sigma = std::sqrt(a.variance) * 255.0;
    std::vector<std::uint8_t> out(img.samples().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        // Box-Muller, one draw per pixel so results do not depend on the
        // platform's normal_distribution.
        const double u1 = 1.0 - uniform01(rng);
        const double u2 = uniform01(rng);
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        out[i] = to_pixel(img.samples()[i] + sigma * z);
    }
    return GrayImage(img.width(), img.height(), std::move(out));
}

GrayImage salt_pepper(const GrayImage& img, const attack::SaltPepper& a) {
    std::mt19937_64 rng(a.seed);
    std::vector<std::uint8_t> out(img.samples().begin(), img.samples().end());
    for (auto& px : out) {
        const double u = uniform01(rng);
        if (u < a.density / 2.0)
            px = 0;
        else if (u < a.density)
            px = 255;
    }
    return GrayImage(img.width(), img.height(), std::move(out));
}

// --- filtering --------------------------------------------------------------

GrayImage median(const GrayImage& img, int window) {
    const auto half = static_cast<std::ptrdiff_t>(window / 2);
    std::vector<std::uint8_t> out(img.samples().size());
    std::vector<std::uint8_t> buf(static_cast<std::size_t>(window * window));
    for (std::size_t r = 0; r < img.height(); ++r)
        for (std::size_t c = 0; c < img.width(); ++c) {
            std::size_t n = 0;
            for (std::ptrdiff_t dr = -half; dr <= half; ++dr)
                for (std::ptrdiff_t dc = -half; dc <= half; ++dc)
                    buf[n++] = img(reflect_index(static_cast<std::ptrdiff_t>(r) + dr, img.height()),
                                   reflect_index(static_cast<std::ptrdiff_t>(c) + dc, img.width()));
            std::nth_element(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(n / 2), buf.end());
            out[r * img.width() + c] = buf[n / 2];
        }
    return GrayImage(img.width(), img.height(), std::move(out));
}

GrayImage histogram_equalize(const GrayImage& img) {
    std::array<std::size_t, 256> hist{};
    for (auto v : img.samples())
        ++hist[v];
    std::array<std::size_t, 256> cdf{};
    std::size_t run = 0;
    for (std::size_t v = 0; v < 256; ++v)
        cdf[v] = run += hist[v];
    const std::size_t total = img.samples().size();
    const std::size_t cdf_min = *std::find_if(cdf.begin(), cdf.end(), [](std::size_t x) { return x > 0; });
    if (total == cdf_min)
        return img;
    std::array<std::uint8_t, 256> lut{};
    for (std::size_t v = 0; v < 256; ++v)
        lut[v] = cdf[v] < cdf_min ? 0
                                  : to_pixel(static_cast<double>(cdf[v] - cdf_min) * 255.0 /
                                             static_cast<double>(total - cdf_min));
    return map_pixels(img, [&](std::uint8_t v) { return lut[v]; });
}

GrayImage sharpen(const GrayImage& img, double amount) {
    static constexpr std::array<double, 3> k{0.25, 0.5, 0.25};
    const std::size_t w = img.width(), h = img.height();
    std::vector<std::uint8_t> out(w * h);
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < w; ++c) {
            double blur = 0.0;
            for (std::ptrdiff_t dr = -1; dr <= 1; ++dr)
                for (std::ptrdiff_t dc = -1; dc <= 1; ++dc)
                    blur += k[static_cast<std::size_t>(dr + 1)] * k[static_cast<std::size_t>(dc + 1)] *
                            img(reflect_index(static_cast<std::ptrdiff_t>(r) + dr, h),
                                reflect_index(static_cast<std::ptrdiff_t>(c) + dc, w));
            const double v = img(r, c);
            out[r * w + c] = to_pixel(v + amount * (v - blur));
        }
    return GrayImage(w, h, std::move(out));
}

GrayImage crop(const GrayImage& img, double ratio) {
    const double keep = std::sqrt(1.0 - ratio);
    const auto kh = static_cast<std::size_t>(std::lround(static_cast<double>(img.height()) * keep));
    const auto kw = static_cast<std::size_t>(std::lround(static_cast<double>(img.width()) * keep));
    const std::size_t top = (img.height() - kh) / 2, left = (img.width() - kw) / 2;
    std::vector<std::uint8_t> out(img.samples().size(), 128);
    for (std::size_t r = top; r < top + kh; ++r)
        for (std::size_t c = left; c < left + kw; ++c)
            out[r * img.width() + c] = img(r, c);
    return GrayImage(img.width(), img.height(), std::move(out));
}

// --- parsing ----------------------------------------------------------------

double parse_number(std::string_view s, std::string_view what) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw InputError("invalid " + std::string(what) + " parameter: '" + std::string(s) + "'");
    return v;
}

std::string format_number(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

void validate(const AttackSpec& spec) {
    std::visit(overloaded{
                   [](const attack::Jpeg& a) {
                       if (a.quality < 1 || a.quality > 100)
                           throw InputError("JPEG quality must be in [1, 100]");
                   },
                   [](const attack::Rotate& a) {
                       if (!std::isfinite(a.degrees))
                           throw InputError("rotation angle must be finite");
                   },
                   [](const attack::Crop& a) {
                       if (!(a.ratio > 0.0 && a.ratio < 1.0))
                           throw InputError("crop ratio must be in (0, 1)");
                   },
                   [](const attack::Resize& a) {
                       if (!(a.scale > 0.0 && a.scale <= 4.0))
                           throw InputError("resize scale must be in (0, 4]");
                   },
                   [](const attack::GaussianNoise& a) {
                       if (!(a.variance >= 0.0 && a.variance <= 1.0))
                           throw InputError("noise variance must be in [0, 1]");
                   },
                   [](const attack::SaltPepper& a) {
                       if (!(a.density >= 0.0 && a.density <= 1.0))
                           throw InputError("salt & pepper density must be in [0, 1]");
                   },
                   [](const attack::Median& a) {
                       if (a.window != 3 && a.window != 5 && a.window != 7)
                           throw InputError("median window must be 3, 5 or 7");
                   },
                   [](const attack::HistEq&) {},
                   [](const attack::Gamma& a) {
                       if (!(a.exponent > 0.0) || !std::isfinite(a.exponent))
                           throw InputError("gamma exponent must be positive");
                   },
                   [](const attack::Sharpen& a) {
                       if (!(a.amount >= 0.0) || !std::isfinite(a.amount))
                           throw InputError("sharpen amount must be non-negative");
                   },
               },
               spec);
}

AttackSpec parse_attack(std::string_view text, std::uint64_t seed) {
    text = trim(text);
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    auto need = [&](std::string_view what) {
        if (arg.empty())
            throw InputError("attack '" + std::string(name) + "' needs a " + std::string(what));
        return parse_number(arg, what);
    };

    AttackSpec spec;
    if (name == "jpeg") {
        const double q = need("quality");
        if (q != std::floor(q))
            throw InputError("JPEG quality must be an integer");
        spec = attack::Jpeg{static_cast<int>(q)};
    } else if (name == "rotate") {
        spec = attack::Rotate{need("angle")};
    } else if (name == "crop") {
        spec = attack::Crop{need("ratio")};
    } else if (name == "resize") {
        spec = attack::Resize{need("scale")};
    } else if (name == "gn") {
        spec = attack::GaussianNoise{need("variance"), seed};
    } else if (name == "sp") {
        spec = attack::SaltPepper{need("density"), seed};
    } else if (name == "median") {
        const double w = need("window");
        if (w != std::floor(w))
            throw InputError("median window must be an integer");
        spec = attack::Median{static_cast<int>(w)};
    } else if (name == "histeq") {
        if (!arg.empty())
            throw InputError("histeq takes no parameter");
        spec = attack::HistEq{};
    } else if (name == "gamma") {
        spec = attack::Gamma{arg.empty() ? 0.8 : parse_number(arg, "exponent")};
    } else if (name == "sharpen") {
        spec = attack::Sharpen{arg.empty() ? 1.0 : parse_number(arg, "amount")};
    } else {
        throw InputError("unknown attack '" + std::string(name) + "'");
    }
    validate(spec);
    return spec;
}

std::vector<AttackSpec> parse_attack_list(std::string_view text, std::uint64_t seed) {
    text = trim(text);
    if (text == "all")
        return standard_attack_suite(seed);
    std::vector<AttackSpec> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = trim(text.substr(0, comma));
        if (!item.empty())
            out.push_back(parse_attack(item, seed));
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::string to_string(const AttackSpec& spec) {
    return std::visit(overloaded{
                          [](const attack::Jpeg& a) { return "jpeg:" + std::to_string(a.quality); },
                          [](const attack::Rotate& a) { return "rotate:" + format_number(a.degrees); },
                          [](const attack::Crop& a) { return "crop:" + format_number(a.ratio); },
                          [](const attack::Resize& a) { return "resize:" + format_number(a.scale); },
                          [](const attack::GaussianNoise& a) { return "gn:" + format_number(a.variance); },
                          [](const attack::SaltPepper& a) { return "sp:" + format_number(a.density); },
                          [](const attack::Median& a) { return "median:" + std::to_string(a.window); },
                          [](const attack::HistEq&) { return std::string("histeq"); },
                          [](const attack::Gamma& a) { return "gamma:" + format_number(a.exponent); },
                          [](const attack::Sharpen& a) { return "sharpen:" + format_number(a.amount); },
                      },
                      spec);
}

std::vector<AttackSpec> standard_attack_suite(std::uint64_t seed) {
    return {
        attack::Gamma{0.8},       attack::HistEq{},
        attack::Median{3},        attack::Jpeg{70},
        attack::SaltPepper{0.01, seed}, attack::Resize{0.5},
        attack::Sharpen{1.0},     attack::GaussianNoise{0.005, seed},
        attack::Crop{0.10},       attack::Crop{0.25},
        attack::Rotate{20.0},     attack::Rotate{45.0},
    };
}

GrayImage apply_attack(const GrayImage& image, const AttackSpec& spec) {
    validate(spec);
    return std::visit(
        overloaded{
            [&](const attack::Jpeg& a) { return decode_jpeg(encode_jpeg(image, a.quality)); },
            [&](const attack::Rotate& a) {
                if (a.degrees == 0.0)
                    return image;
                return rotate_once(rotate_once(image, a.degrees), -a.degrees);
            },
            [&](const attack::Crop& a) { return crop(image, a.ratio); },
            [&](const attack::Resize& a) {
                const auto w = std::max<std::size_t>(
                    1, static_cast<std::size_t>(std::lround(static_cast<double>(image.width()) * a.scale)));
                const auto h = std::max<std::size_t>(
                    1, static_cast<std::size_t>(std::lround(static_cast<double>(image.height()) * a.scale)));
                return resize_to(resize_to(image, w, h), image.width(), image.height());
            },
            [&](const attack::GaussianNoise& a) { return gaussian_noise(image, a); },
            [&](const attack::SaltPepper& a) { return salt_pepper(image, a); },
            [&](const attack::Median& a) { return median(image, a.window); },
            [&](const attack::HistEq&) { return histogram_equalize(image); },
            [&](const attack::Gamma& a) {
                return map_pixels(image, [&](std::uint8_t v) {
                    return to_pixel(255.0 * std::pow(static_cast<double>(v) / 255.0, a.exponent));
                });
            },
            [&](const attack::Sharpen& a) { return sharpen(image, a.amount); },
        },
        spec);
}

}  // namespace lcvwm
