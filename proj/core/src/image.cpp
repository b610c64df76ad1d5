#include "lcvwm/image.hpp"

#include "lcvwm/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lcvwm {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
    if (width == 0 || height == 0)
        throw DimensionError("image dimensions must be positive");
    if (samples_.size() != width * height)
        throw DimensionError("sample count " + std::to_string(samples_.size()) + " does not match " +
                             std::to_string(width) + "x" + std::to_string(height));
}

GrayImage GrayImage::filled(std::size_t width, std::size_t height, std::uint8_t value) {
    return GrayImage(width, height, std::vector<std::uint8_t>(width * height, value));
}

CoeffGrid::CoeffGrid(std::size_t width, std::size_t height, double fill)
    : width_(width), height_(height), values_(width * height, fill) {}

CoeffGrid::CoeffGrid(std::size_t width, std::size_t height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
    if (values_.size() != width * height)
        throw DimensionError("coefficient count does not match grid dimensions");
}

CoeffGrid& CoeffGrid::operator+=(const CoeffGrid& rhs) {
    if (!same_shape(rhs))
        throw DimensionError("grid shapes differ");
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] += rhs.values_[i];
    return *this;
}

CoeffGrid& CoeffGrid::operator-=(const CoeffGrid& rhs) {
    if (!same_shape(rhs))
        throw DimensionError("grid shapes differ");
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] -= rhs.values_[i];
    return *this;
}

CoeffGrid& CoeffGrid::operator*=(double k) noexcept {
    for (double& v : values_)
        v *= k;
    return *this;
}

BlockGrid partition(const CoeffGrid& grid, std::size_t block_side) {
    if (block_side == 0)
        throw DimensionError("block side must be positive");
    if (grid.width() % block_side != 0 || grid.height() % block_side != 0)
        throw DimensionError("grid " + std::to_string(grid.width()) + "x" + std::to_string(grid.height()) +
                             " is not divisible into " + std::to_string(block_side) + "-sample blocks");

    BlockGrid out;
    out.block_side = block_side;
    out.rows = grid.height() / block_side;
    out.cols = grid.width() / block_side;
    out.blocks.reserve(out.rows * out.cols);
    for (std::size_t br = 0; br < out.rows; ++br) {
        for (std::size_t bc = 0; bc < out.cols; ++bc) {
            CoeffGrid block(block_side, block_side);
            for (std::size_t r = 0; r < block_side; ++r)
                for (std::size_t c = 0; c < block_side; ++c)
                    block(r, c) = grid(br * block_side + r, bc * block_side + c);
            out.blocks.push_back(std::move(block));
        }
    }
    return out;
}

CoeffGrid retile(const BlockGrid& blocks) {
    const std::size_t l = blocks.block_side;
    CoeffGrid out(blocks.cols * l, blocks.rows * l);
    for (std::size_t br = 0; br < blocks.rows; ++br)
        for (std::size_t bc = 0; bc < blocks.cols; ++bc) {
            const CoeffGrid& block = blocks.at(br, bc);
            for (std::size_t r = 0; r < l; ++r)
                for (std::size_t c = 0; c < l; ++c)
                    out(br * l + r, bc * l + c) = block(r, c);
        }
    return out;
}

std::vector<BlockIndex> serpentine_order(std::size_t rows, std::size_t cols) {
    std::vector<BlockIndex> order;
    order.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < cols; ++k) {
            const std::size_t c = (r % 2 == 0) ? k : cols - 1 - k;
            order.push_back({r, c});
        }
    }
    return order;
}

CoeffGrid to_coeffs(const GrayImage& image) {
    std::vector<double> values(image.samples().begin(), image.samples().end());
    return CoeffGrid(image.width(), image.height(), std::move(values));
}

GrayImage quantize(const CoeffGrid& grid) {
    std::vector<std::uint8_t> samples(grid.size());
    auto src = grid.values();
    std::transform(src.begin(), src.end(), samples.begin(), [](double v) {
        return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
    });
    return GrayImage(grid.width(), grid.height(), std::move(samples));
}

void require_divisible(std::size_t width, std::size_t height, std::size_t multiple, const char* what) {
    if (width == 0 || height == 0 || width % multiple != 0 || height % multiple != 0)
        throw DimensionError(std::string(what) + ": dimensions " + std::to_string(width) + "x" +
                             std::to_string(height) + " must be positive multiples of " +
                             std::to_string(multiple));
}

}  // namespace lcvwm
