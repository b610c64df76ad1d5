#include "lcvwm/config_io.hpp"

#include "json_conv.hpp"
#include "lcvwm/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace lcvwm {
namespace detail {

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json to_json(const EmbedConfig& c) {
    auto pair = [](const PositionPair& p) {
        return Json::array({Json::array({p[0].row, p[0].col}), Json::array({p[1].row, p[1].col})});
    };
    Json strength;
    strength["alpha0_approx"] = c.strength.alpha0_approx;
    strength["alpha0_detail"] = c.strength.alpha0_detail;
    strength["scale"] = c.strength.scale;
    strength["lower"] = c.strength.lower;
    strength["upper"] = c.strength.upper;
    Json j;
    j["block_approx"] = c.block_approx;
    j["block_detail"] = c.block_detail;
    j["approx_positions"] = pair(c.approx_positions);
    j["detail_positions"] = pair(c.detail_positions);
    j["strength"] = std::move(strength);
    j["adaptive"] = c.adaptive;
    return j;
}

Json to_json(const DatasetStats& s) {
    Json j;
    j["mu_D"] = s.mu_d;
    j["sigma_D"] = s.sigma_d;
    j["image_count"] = s.image_count;
    return j;
}

Json to_json(const ReplicationPlan& p) {
    Json j;
    j["rho"] = p.rho;
    j["blocks_approx"] = p.blocks_approx;
    j["blocks_per_detail_subband"] = p.blocks_per_detail_subband;
    j["redundancy_approx"] = p.redundancy_approx;
    j["redundancy_detail"] = p.redundancy_detail;
    return j;
}

Json to_json(const ScaleReport& r) {
    Json j;
    j["alpha_initial"] = r.alpha_initial;
    j["alpha_min"] = r.alpha_min;
    j["alpha_max"] = r.alpha_max;
    j["alpha_mean"] = r.alpha_mean;
    j["blocks"] = r.blocks;
    j["modified_blocks"] = r.modified_blocks;
    return j;
}

}  // namespace detail

namespace {

using detail::Json;

Json parse_object(std::string_view text, const char* what) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
    if (!j.is_object())
        throw InputError(std::string(what) + ": expected a JSON object");
    return j;
}

template <class T>
T get_field(const Json& j, const char* key, const char* what) {
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw InputError(std::string(what) + ": field '" + key + "': " + e.what());
    }
}

void reject_unknown(const Json& j, std::initializer_list<std::string_view> known, const char* what) {
    for (const auto& [key, _] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw InputError(std::string(what) + ": unknown field '" + key + "'");
}

PositionPair read_pair(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw InputError(std::string(what) + ": expected [[row, col], [row, col]]");
    PositionPair p;
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& e = j[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
            throw InputError(std::string(what) + ": positions are pairs of positive integers");
        p[i] = {e[0].get<std::size_t>(), e[1].get<std::size_t>()};
    }
    return p;
}

}  // namespace

std::string config_to_json(const EmbedConfig& config) { return detail::to_json(config).dump(2) + "\n"; }

EmbedConfig config_from_json(std::string_view text) {
    static constexpr const char* what = "config";
    const Json j = parse_object(text, what);
    reject_unknown(j, {"block_approx", "block_detail", "approx_positions", "detail_positions", "strength", "adaptive"},
                   what);
    EmbedConfig c;
    if (j.contains("block_approx"))
        c.block_approx = get_field<std::size_t>(j, "block_approx", what);
    if (j.contains("block_detail"))
        c.block_detail = get_field<std::size_t>(j, "block_detail", what);
    if (j.contains("approx_positions"))
        c.approx_positions = read_pair(j["approx_positions"], what);
    if (j.contains("detail_positions"))
        c.detail_positions = read_pair(j["detail_positions"], what);
    if (j.contains("adaptive"))
        c.adaptive = get_field<bool>(j, "adaptive", what);
    if (j.contains("strength")) {
        const Json& s = j["strength"];
        if (!s.is_object())
            throw InputError("config: 'strength' must be an object");
        reject_unknown(s, {"alpha0_approx", "alpha0_detail", "scale", "lower", "upper"}, what);
        auto opt = [&](const char* key, double& field) {
            if (s.contains(key))
                field = get_field<double>(s, key, what);
        };
        opt("alpha0_approx", c.strength.alpha0_approx);
        opt("alpha0_detail", c.strength.alpha0_detail);
        opt("scale", c.strength.scale);
        opt("lower", c.strength.lower);
        opt("upper", c.strength.upper);
    }
    c.validate();
    return c;
}

std::string stats_to_json(const DatasetStats& stats) { return detail::to_json(stats).dump(2) + "\n"; }

DatasetStats stats_from_json(std::string_view text) {
    static constexpr const char* what = "stats";
    const Json j = parse_object(text, what);
    DatasetStats s;
    s.mu_d = get_field<double>(j, "mu_D", what);
    s.sigma_d = get_field<double>(j, "sigma_D", what);
    if (j.contains("image_count"))
        s.image_count = get_field<std::size_t>(j, "image_count", what);
    if (!std::isfinite(s.mu_d) || !std::isfinite(s.sigma_d) || s.mu_d < 0.0 || s.sigma_d < 0.0)
        throw InputError("stats: mu_D and sigma_D must be finite and non-negative");
    return s;
}

std::string embed_report_to_json(const EmbedReport& report, const EmbedConfig& config) {
    Json j;
    j["payload_length"] = report.payload_length;
    j["image_complexity"] = report.image_complexity;
    j["adaptive"] = report.adaptive;
    j["plan"] = detail::to_json(report.plan);
    j["approximate"] = detail::to_json(report.approximate);
    Json details = Json::array();
    for (const auto& d : report.details)
        details.push_back(detail::to_json(d));
    j["details"] = std::move(details);
    j["config"] = detail::to_json(config);
    return j.dump(2) + "\n";
}

std::string extraction_to_json(const ExtractionResult& result) {
    Json j;
    j["bits"] = format_bits(result.payload);
    Json conf = Json::array();
    for (const auto& c : result.confidence) {
        Json e;
        e["weight_one"] = c.weight_one;
        e["weight_zero"] = c.weight_zero;
        e["votes"] = c.votes;
        e["margin"] = c.margin();
        conf.push_back(std::move(e));
    }
    j["confidence"] = std::move(conf);
    return j.dump(2) + "\n";
}

Watermark parse_bits(std::string_view text) {
    Watermark w;
    for (char ch : text) {
        if (ch == '0' || ch == '1')
            w.bits.push_back(static_cast<std::uint8_t>(ch - '0'));
        else if (!std::isspace(static_cast<unsigned char>(ch)))
            throw InputError(std::string("bits file may only contain '0' and '1', found '") + ch + "'");
    }
    return w;
}

std::string format_bits(const Watermark& bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits.bits)
        s.push_back(b != 0 ? '1' : '0');
    return s;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
        throw InputError("write failed: " + path.string());
}

}  // namespace lcvwm
