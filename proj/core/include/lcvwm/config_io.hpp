#pragma once

#include "lcvwm/codec.hpp"
#include "lcvwm/complexity.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace lcvwm {

/// JSON mirror of EmbedConfig (including StrengthParams). Missing fields keep
/// their defaults; unknown fields and wrong types raise InputError.
std::string config_to_json(const EmbedConfig& config);
EmbedConfig config_from_json(std::string_view text);

/// {"mu_D": ..., "sigma_D": ..., "image_count": ...}
std::string stats_to_json(const DatasetStats& stats);
DatasetStats stats_from_json(std::string_view text);

/// Embedding report together with the resolved configuration.
std::string embed_report_to_json(const EmbedReport& report, const EmbedConfig& config);

/// Extracted bits and per-bit voting confidence.
std::string extraction_to_json(const ExtractionResult& result);

/// ASCII '0'/'1' payload. Whitespace is ignored; any other character is an
/// InputError.
Watermark parse_bits(std::string_view text);
std::string format_bits(const Watermark& bits);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace lcvwm
