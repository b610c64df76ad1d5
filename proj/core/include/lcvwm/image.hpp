#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lcvwm {

/// 8-bit grayscale image, row-major. Cover, watermarked and attacked images
/// are all GrayImage values.
class GrayImage {
public:
    GrayImage() = default;
    GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> samples);

    static GrayImage filled(std::size_t width, std::size_t height, std::uint8_t value);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    bool empty() const noexcept { return samples_.empty(); }

    std::uint8_t operator()(std::size_t row, std::size_t col) const noexcept {
        return samples_[row * width_ + col];
    }
    std::span<const std::uint8_t> samples() const noexcept { return samples_; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<std::uint8_t> samples_;
};

/// Real-valued grid used for subbands, DCT blocks and intermediate signals.
class CoeffGrid {
public:
    CoeffGrid() = default;
    CoeffGrid(std::size_t width, std::size_t height, double fill = 0.0);
    CoeffGrid(std::size_t width, std::size_t height, std::vector<double> values);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t size() const noexcept { return values_.size(); }

    double& operator()(std::size_t row, std::size_t col) noexcept { return values_[row * width_ + col]; }
    double operator()(std::size_t row, std::size_t col) const noexcept {
        return values_[row * width_ + col];
    }

    double* row(std::size_t r) noexcept { return values_.data() + r * width_; }
    const double* row(std::size_t r) const noexcept { return values_.data() + r * width_; }
    std::span<double> values() noexcept { return values_; }
    std::span<const double> values() const noexcept { return values_; }

    bool same_shape(const CoeffGrid& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_;
    }

    CoeffGrid& operator+=(const CoeffGrid& rhs);
    CoeffGrid& operator-=(const CoeffGrid& rhs);
    CoeffGrid& operator*=(double k) noexcept;

    friend CoeffGrid operator+(CoeffGrid lhs, const CoeffGrid& rhs) { return lhs += rhs; }
    friend CoeffGrid operator-(CoeffGrid lhs, const CoeffGrid& rhs) { return lhs -= rhs; }
    friend CoeffGrid operator*(CoeffGrid lhs, double k) { return lhs *= k; }
    friend bool operator==(const CoeffGrid&, const CoeffGrid&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<double> values_;
};

/// Square tiles of side `block_side` covering a grid, stored row-major.
struct BlockGrid {
    std::size_t block_side = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<CoeffGrid> blocks;

    CoeffGrid& at(std::size_t row, std::size_t col) { return blocks[row * cols + col]; }
    const CoeffGrid& at(std::size_t row, std::size_t col) const { return blocks[row * cols + col]; }
};

struct BlockIndex {
    std::size_t row = 0;
    std::size_t col = 0;
    friend bool operator==(const BlockIndex&, const BlockIndex&) = default;
};

/// Splits `grid` into non-overlapping block_side x block_side tiles.
/// Throws DimensionError unless both dimensions are multiples of block_side.
BlockGrid partition(const CoeffGrid& grid, std::size_t block_side);

/// Exact inverse of partition().
CoeffGrid retile(const BlockGrid& blocks);

/// Boustrophedon block order: even rows (0-based) left to right, odd rows
/// right to left. Consecutive entries are always grid neighbours.
std::vector<BlockIndex> serpentine_order(std::size_t rows, std::size_t cols);

CoeffGrid to_coeffs(const GrayImage& image);

/// Rounds to nearest and clamps into [0,255].
GrayImage quantize(const CoeffGrid& grid);

/// Rejects images the contourlet + blocking pipeline cannot process: both
/// dimensions must be multiples of `multiple`.
void require_divisible(std::size_t width, std::size_t height, std::size_t multiple, const char* what);

}  // namespace lcvwm
