#pragma once

#include "lcvwm/complexity.hpp"
#include "lcvwm/image.hpp"
#include "lcvwm/transforms.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lcvwm {

/// Payload bit sequence; each element is 0 or 1.
struct Watermark {
    std::vector<std::uint8_t> bits;

    std::size_t size() const noexcept { return bits.size(); }
    friend bool operator==(const Watermark&, const Watermark&) = default;
};

struct SecretKey {
    std::uint64_t seed = 0;

    /// Accepts up to 16 hex digits with optional "0x" prefix.
    static SecretKey parse_hex(std::string_view text);
    std::string to_hex() const;
    friend bool operator==(const SecretKey&, const SecretKey&) = default;
};

/// SplitMix64 stream, 64 bits per word, most significant bit first.
Watermark keystream(SecretKey key, std::size_t length);

/// 1-based (row, col) coordinate inside a DCT block.
struct CoeffPosition {
    std::size_t row = 1;
    std::size_t col = 1;
    friend bool operator==(const CoeffPosition&, const CoeffPosition&) = default;
};

using PositionPair = std::array<CoeffPosition, 2>;

struct EmbedConfig {
    std::size_t block_approx = 4;   // L_AB
    std::size_t block_detail = 16;  // L_DB
    PositionPair approx_positions{{{3, 4}, {4, 3}}};
    PositionPair detail_positions{{{14, 15}, {15, 14}}};
    StrengthParams strength;
    bool adaptive = true;

    void validate() const;
    /// Image sides must be multiples of this value.
    std::size_t dimension_multiple() const;
};

struct ReplicationPlan {
    double rho = 0.0;  // M*N / L_w
    std::size_t blocks_approx = 0;
    std::size_t blocks_per_detail_subband = 0;
    double redundancy_approx = 0.0;  // rho / (4 L_AB^2)
    double redundancy_detail = 0.0;  // rho / L_DB^2, all four detail subbands together
};

/// Throws CapacityError when no single subband can hold the whole payload.
ReplicationPlan replication_plan(std::size_t height, std::size_t width, std::size_t payload_length,
                                 const EmbedConfig& config);

/// Forces the pair (u,v),(w,z) of a DCT block to encode `bit` with margin
/// `alpha`. An already satisfied pair is left alone; otherwise the pair is
/// pushed apart symmetrically about its mean so the gap is exactly alpha.
CoeffGrid embed_bit(const CoeffGrid& coeffs, const PositionPair& positions, double alpha, std::uint8_t bit);

struct ExtractionVote {
    std::uint8_t bit = 0;
    double weight = 0.0;
};

/// bit = coeff(u,v) > coeff(w,z), weight = |difference|. Exact ties read as 0.
ExtractionVote read_bit(const CoeffGrid& coeffs, const PositionPair& positions);

/// Strength statistics of one subband's scan.
struct ScaleReport {
    double alpha_initial = 0.0;
    double alpha_min = 0.0;
    double alpha_max = 0.0;
    double alpha_mean = 0.0;
    std::size_t blocks = 0;
    std::size_t modified_blocks = 0;
};

struct EmbedReport {
    ReplicationPlan plan;
    std::size_t payload_length = 0;
    double image_complexity = 0.0;  // mu_i
    bool adaptive = true;
    ScaleReport approximate;
    std::array<ScaleReport, 4> details;
};

struct EmbedResult {
    GrayImage image;
    EmbedReport report;
};

/// Embeds keystream(key, payload_length).
EmbedResult embed_image(const GrayImage& image, SecretKey key, std::size_t payload_length,
                        const EmbedConfig& config, const DatasetStats& stats);

/// Embeds an explicit payload.
EmbedResult embed_payload(const GrayImage& image, const Watermark& payload, const EmbedConfig& config,
                          const DatasetStats& stats);

struct BitConfidence {
    double weight_one = 0.0;
    double weight_zero = 0.0;
    std::size_t votes = 0;

    /// (w1 - w0) / (w1 + w0), 0 when no weight was cast.
    double margin() const noexcept;
};

struct ExtractionResult {
    Watermark payload;
    std::vector<BitConfidence> confidence;
};

/// Blind extraction: weighted majority over every replica in the approximate
/// and the four directional subbands. Needs only the image, the payload
/// length and the configuration.
ExtractionResult extract_image(const GrayImage& image, std::size_t payload_length, const EmbedConfig& config);

/// Embeds a payload into one subband along its serpentine scan; exposed for
/// tests and tooling.
CoeffGrid embed_subband(const CoeffGrid& band, std::size_t block_side, const PositionPair& positions,
                        double alpha_initial, const Watermark& payload, const StrengthParams& params,
                        bool adaptive, ScaleReport* report = nullptr);

}  // namespace lcvwm
