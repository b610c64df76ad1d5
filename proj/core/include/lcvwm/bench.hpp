#pragma once

#include "lcvwm/attacks.hpp"
#include "lcvwm/codec.hpp"
#include "lcvwm/complexity.hpp"
#include "lcvwm/image.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace lcvwm {

struct NamedImage {
    std::string name;
    GrayImage image;
};

/// All PNG/PGM files of a directory, sorted by file name.
std::vector<NamedImage> load_corpus(const std::filesystem::path& dir);

/// `count` distinct keys derived from `seed` (SplitMix64 words).
std::vector<SecretKey> derive_keys(std::uint64_t seed, std::size_t count);

/// 64-bit FNV-1a over the raw samples.
std::uint64_t image_hash(const GrayImage& image);

inline constexpr const char* kNoAttack = "none";

/// One (image, key, attack) measurement. psnr/ssim compare the watermarked
/// image with the original; nc/ber compare the extracted payload (after the
/// attack) with the embedded one. Fidelity rows use attack "none".
struct EvaluationRow {
    std::string mode;  // "adaptive" or "non_adaptive"
    std::string image;
    std::string key;  // hex
    std::string attack;
    double psnr = 0.0;
    double ssim = 0.0;
    double nc = 0.0;
    double ber = 0.0;
    double alpha_approx = 0.0;  // mean alpha over approximate-subband blocks
    double alpha_detail = 0.0;  // mean over the four directional subbands
};

/// Means over every row sharing (mode, attack).
struct AggregateRow {
    std::string mode;
    std::string attack;
    std::size_t runs = 0;
    double psnr = 0.0;
    double ssim = 0.0;
    double nc = 0.0;
    double ber = 0.0;
};

struct ManifestEntry {
    std::string name;
    std::size_t width = 0;
    std::size_t height = 0;
    std::uint64_t hash = 0;
};

struct EvaluationReport {
    EmbedConfig config;
    DatasetStats stats;
    std::size_t payload_length = 0;
    std::vector<std::string> keys;
    std::vector<std::string> attacks;
    std::vector<ManifestEntry> manifest;
    std::vector<EvaluationRow> rows;  // sorted by image, key, attack order
    std::vector<AggregateRow> aggregates;
};

struct EvaluationOptions {
    std::size_t payload_length = 128;
    unsigned threads = 0;  // 0 = hardware concurrency
};

/// Embeds keystream(key) with every key, scores fidelity, then applies each
/// attack and scores extraction. Output is independent of thread count.
EvaluationReport evaluate(std::span<const NamedImage> corpus, std::span<const SecretKey> keys,
                          std::span<const AttackSpec> attacks, const EmbedConfig& config,
                          const DatasetStats& stats, const EvaluationOptions& options = {});

EvaluationReport evaluate(const NamedImage& image, std::span<const SecretKey> keys,
                          std::span<const AttackSpec> attacks, const EmbedConfig& config,
                          const DatasetStats& stats, const EvaluationOptions& options = {});

/// adaptive minus non-adaptive means for one attack ("none" = fidelity).
struct ModeDiff {
    std::string attack;
    double delta_psnr = 0.0;
    double delta_ssim = 0.0;
    double delta_nc = 0.0;
    double delta_ber = 0.0;
};

struct ModeComparison {
    EvaluationReport adaptive;
    EvaluationReport non_adaptive;
    std::vector<ModeDiff> diff;
};

/// Runs evaluate() twice, differing only in config.adaptive.
ModeComparison compare_modes(std::span<const NamedImage> corpus, std::span<const SecretKey> keys,
                             std::span<const AttackSpec> attacks, const EmbedConfig& config,
                             const DatasetStats& stats, const EvaluationOptions& options = {});

/// Recomputes the (mode, attack) means from rows, in first-seen order.
std::vector<AggregateRow> aggregate(std::span<const EvaluationRow> rows);

/// Column order is fixed:
/// mode,image,key,attack,psnr,ssim,nc,ber,alpha_approx,alpha_detail
std::string csv_header();
std::string to_csv(const EvaluationReport& report, bool header = true);
std::string to_csv(const ModeComparison& comparison);

std::string to_json(const EvaluationReport& report);
/// {"adaptive": ..., "non_adaptive": ..., "diff": [...]}
std::string to_json(const ModeComparison& comparison);

}  // namespace lcvwm
