#include "lcvwm/codec.hpp"

#include "lcvwm/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

namespace lcvwm {
namespace {

double& at(CoeffGrid& g, const CoeffPosition& p) { return g(p.row - 1, p.col - 1); }
double at(const CoeffGrid& g, const CoeffPosition& p) { return g(p.row - 1, p.col - 1); }

// Returns true when the pair had to be moved.
bool force_bit(CoeffGrid& coeffs, const PositionPair& positions, double alpha, std::uint8_t bit) {
    double& a = at(coeffs, positions[0]);
    double& c = at(coeffs, positions[1]);
    if (bit != 0 ? (a > c + alpha) : (a + alpha < c))
        return false;
    const double mean = 0.5 * (a + c);
    const double half = 0.5 * alpha;
    a = bit != 0 ? mean + half : mean - half;
    c = bit != 0 ? mean - half : mean + half;
    return true;
}

void check_positions(const PositionPair& p, std::size_t side, const char* scale) {
    for (const auto& pos : p)
        if (pos.row < 1 || pos.col < 1 || pos.row > side || pos.col > side)
            throw InputError(std::string(scale) + " coefficient position outside the " + std::to_string(side) +
                             "x" + std::to_string(side) + " block");
    if (p[0] == p[1])
        throw InputError(std::string(scale) + " coefficient positions must differ");
}

void vote_subband(const CoeffGrid& band, std::size_t block_side, const PositionPair& positions,
                  std::vector<BitConfidence>& tally) {
    const auto blocks = partition(band, block_side);
    const auto order = serpentine_order(blocks.rows, blocks.cols);
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto vote = read_bit(dct2(blocks.at(order[k].row, order[k].col)), positions);
        auto& slot = tally[k % tally.size()];
        (vote.bit != 0 ? slot.weight_one : slot.weight_zero) += vote.weight;
        ++slot.votes;
    }
}

}  // namespace

SecretKey SecretKey::parse_hex(std::string_view text) {
    if (text.starts_with("0x") || text.starts_with("0X"))
        text.remove_prefix(2);
    if (text.empty() || text.size() > 16)
        throw InputError("key must be 1 to 16 hex digits");
    std::uint64_t v = 0;
    for (char ch : text) {
        const int d = std::isdigit(static_cast<unsigned char>(ch))   ? ch - '0'
                      : (ch >= 'a' && ch <= 'f')                     ? ch - 'a' + 10
                      : (ch >= 'A' && ch <= 'F')                     ? ch - 'A' + 10
                                                                     : -1;
        if (d < 0)
            throw InputError("invalid hex digit in key: " + std::string(1, ch));
        v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    return SecretKey{v};
}

std::string SecretKey::to_hex() const {
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(seed));
    return buf;
}

Watermark keystream(SecretKey key, std::size_t length) {
    Watermark w;
    w.bits.reserve(length);
    std::uint64_t state = key.seed;
    while (w.bits.size() < length) {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z ^= z >> 31;
        for (int b = 63; b >= 0 && w.bits.size() < length; --b)
            w.bits.push_back(static_cast<std::uint8_t>((z >> b) & 1U));
    }
    return w;
}

void EmbedConfig::validate() const {
    if (block_approx < 3 || block_detail < 3)
        throw InputError("block sides must be at least 3");
    check_positions(approx_positions, block_approx, "approximate-scale");
    check_positions(detail_positions, block_detail, "detail-scale");
    strength.validate();
}

std::size_t EmbedConfig::dimension_multiple() const {
    return std::lcm(std::size_t{4}, std::lcm(2 * block_approx, 2 * block_detail));
}

ReplicationPlan replication_plan(std::size_t height, std::size_t width, std::size_t payload_length,
                                 const EmbedConfig& config) {
    if (payload_length == 0)
        throw InputError("payload length must be at least 1");
    const double mn = static_cast<double>(height) * static_cast<double>(width);
    const double lab = static_cast<double>(config.block_approx);
    const double ldb = static_cast<double>(config.block_detail);

    ReplicationPlan plan;
    plan.rho = mn / static_cast<double>(payload_length);
    plan.blocks_approx = (height / 2 / config.block_approx) * (width / 2 / config.block_approx);
    plan.blocks_per_detail_subband = (height / 2 / config.block_detail) * (width / 2 / config.block_detail);
    plan.redundancy_approx = plan.rho / (4.0 * lab * lab);
    plan.redundancy_detail = plan.rho / (ldb * ldb);

    if (std::max(plan.blocks_approx, plan.blocks_per_detail_subband) < payload_length)
        throw CapacityError("payload of " + std::to_string(payload_length) + " bits needs at least as many blocks; " +
                            "largest subband has " + std::to_string(plan.blocks_approx) + " blocks");
    return plan;
}

CoeffGrid embed_bit(const CoeffGrid& coeffs, const PositionPair& positions, double alpha, std::uint8_t bit) {
    CoeffGrid out = coeffs;
    force_bit(out, positions, alpha, bit);
    return out;
}

ExtractionVote read_bit(const CoeffGrid& coeffs, const PositionPair& positions) {
    const double diff = at(coeffs, positions[0]) - at(coeffs, positions[1]);
    if (diff > 0.0)
        return {1, diff};
    if (diff < 0.0)
        return {0, -diff};
    return {0, 0.0};
}

CoeffGrid embed_subband(const CoeffGrid& band, std::size_t block_side, const PositionPair& positions,
                        double alpha_initial, const Watermark& payload, const StrengthParams& params,
                        bool adaptive, ScaleReport* report) {
    if (payload.size() == 0)
        throw InputError("empty payload");
    auto blocks = partition(band, block_side);
    const auto order = serpentine_order(blocks.rows, blocks.cols);

    ScaleReport stats;
    stats.alpha_initial = alpha_initial;
    stats.alpha_min = std::numeric_limits<double>::infinity();
    stats.alpha_max = -std::numeric_limits<double>::infinity();
    double alpha_sum = 0.0;

    StrengthState state{alpha_initial, alpha_initial, 0.0};
    for (std::size_t k = 0; k < order.size(); ++k) {
        CoeffGrid& block = blocks.at(order[k].row, order[k].col);
        if (adaptive) {
            const double c = block_complexity(block);
            // The first block of a scan starts at alpha_i.
            state = (k == 0) ? StrengthState{alpha_initial, alpha_initial, c} : next_alpha(state, c, params);
        }
        const double alpha = state.alpha;
        CoeffGrid coeffs = dct2(block);
        if (force_bit(coeffs, positions, alpha, payload.bits[k % payload.size()])) {
            block = idct2(coeffs);
            ++stats.modified_blocks;
        }
        stats.alpha_min = std::min(stats.alpha_min, alpha);
        stats.alpha_max = std::max(stats.alpha_max, alpha);
        alpha_sum += alpha;
    }
    stats.blocks = order.size();
    stats.alpha_mean = order.empty() ? 0.0 : alpha_sum / static_cast<double>(order.size());
    if (report != nullptr)
        *report = stats;
    return retile(blocks);
}

EmbedResult embed_payload(const GrayImage& image, const Watermark& payload, const EmbedConfig& config,
                          const DatasetStats& stats) {
    config.validate();
    for (auto b : payload.bits)
        if (b > 1)
            throw InputError("payload bits must be 0 or 1");
    require_divisible(image.width(), image.height(), config.dimension_multiple(), "watermark embedding");

    EmbedReport report;
    report.plan = replication_plan(image.height(), image.width(), payload.size(), config);
    report.payload_length = payload.size();
    report.adaptive = config.adaptive;
    report.image_complexity = image_mean_complexity(image);

    const auto& sp = config.strength;
    const double alpha_approx =
        config.adaptive ? initial_alpha(report.image_complexity, stats, sp.alpha0_approx) : sp.alpha0_approx;
    const double alpha_detail =
        config.adaptive ? initial_alpha(report.image_complexity, stats, sp.alpha0_detail) : sp.alpha0_detail;

    SubbandSet bands = ct_decompose(image);
    bands.approximate = embed_subband(bands.approximate, config.block_approx, config.approx_positions, alpha_approx,
                                      payload, sp, config.adaptive, &report.approximate);
    for (std::size_t d = 0; d < bands.details.size(); ++d)
        bands.details[d] = embed_subband(bands.details[d], config.block_detail, config.detail_positions,
                                         alpha_detail, payload, sp, config.adaptive, &report.details[d]);

    return {quantize(ct_reconstruct(bands)), report};
}

EmbedResult embed_image(const GrayImage& image, SecretKey key, std::size_t payload_length,
                        const EmbedConfig& config, const DatasetStats& stats) {
    if (payload_length == 0)
        throw InputError("payload length must be at least 1");
    return embed_payload(image, keystream(key, payload_length), config, stats);
}

double BitConfidence::margin() const noexcept {
    const double total = weight_one + weight_zero;
    return total > 0.0 ? (weight_one - weight_zero) / total : 0.0;
}

ExtractionResult extract_image(const GrayImage& image, std::size_t payload_length, const EmbedConfig& config) {
    config.validate();
    if (payload_length == 0)
        throw InputError("payload length must be at least 1");
    require_divisible(image.width(), image.height(), config.dimension_multiple(), "watermark extraction");

    const SubbandSet bands = ct_decompose(image);
    ExtractionResult result;
    result.confidence.resize(payload_length);
    vote_subband(bands.approximate, config.block_approx, config.approx_positions, result.confidence);
    for (const auto& d : bands.details)
        vote_subband(d, config.block_detail, config.detail_positions, result.confidence);

    result.payload.bits.reserve(payload_length);
    for (const auto& c : result.confidence)
        result.payload.bits.push_back(c.weight_one > c.weight_zero ? 1 : 0);
    return result;
}

}  // namespace lcvwm
