// Command-line front end: stats, embed, extract, attack, evaluate, bench.

#include <CLI11.hpp>

#include "lcvwm/attacks.hpp"
#include "lcvwm/bench.hpp"
#include "lcvwm/codec.hpp"
#include "lcvwm/complexity.hpp"
#include "lcvwm/config_io.hpp"
#include "lcvwm/error.hpp"
#include "lcvwm/image_io.hpp"
#include "lcvwm/metrics.hpp"
#include "lcvwm/transforms.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

namespace fs = std::filesystem;
using namespace lcvwm;

namespace {

EmbedConfig load_config(const std::string& path) {
    return path.empty() ? EmbedConfig{} : config_from_json(read_text_file(path));
}

DatasetStats load_stats(const std::string& path) { return stats_from_json(read_text_file(path)); }

// "N" means N keys derived from the seed; anything else is a comma list of
// hex keys.
std::vector<SecretKey> parse_keys(const std::string& text, std::uint64_t seed) {
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
        const auto n = std::stoull(text);
        if (n == 0)
            throw InputError("--keys count must be positive");
        return derive_keys(seed, n);
    }
    std::vector<SecretKey> keys;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!item.empty())
            keys.push_back(SecretKey::parse_hex(item));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (keys.empty())
        throw InputError("--keys is empty");
    return keys;
}

void dump_subbands(const GrayImage& image, const fs::path& dir, const std::string& prefix) {
    fs::create_directories(dir);
    const auto bands = ct_decompose(image);
    write_normalized_pgm(bands.approximate, dir / (prefix + "_approx.pgm"));
    for (std::size_t d = 0; d < bands.details.size(); ++d)
        write_normalized_pgm(bands.details[d], dir / (prefix + "_dir" + std::to_string(d) + ".pgm"));
}

void print_scale(const char* name, const ScaleReport& r) {
    std::printf("  %-8s alpha_i %.4f  mean %.4f  range [%.4f, %.4f]  modified %zu/%zu\n", name, r.alpha_initial,
                r.alpha_mean, r.alpha_min, r.alpha_max, r.modified_blocks, r.blocks);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Blind adaptive contourlet/DCT image watermarking"};
    app.require_subcommand(1);

    // stats
    std::string dataset, out;
    auto* stats_cmd = app.add_subcommand("stats", "Dataset complexity statistics (mu_D, sigma_D)");
    stats_cmd->add_option("--dataset", dataset, "Directory of PNG/PGM images")->required();
    stats_cmd->add_option("--out", out, "Output JSON")->required();

    // embed
    std::string image_path, key_hex, payload_file, stats_path, config_path, report_path, dump_dir;
    std::size_t payload_len = 128;
    bool non_adaptive = false;
    auto* embed_cmd = app.add_subcommand("embed", "Embed a watermark");
    embed_cmd->add_option("--image", image_path)->required();
    embed_cmd->add_option("--key", key_hex, "Secret key, up to 16 hex digits")->required();
    embed_cmd->add_option("--payload-len", payload_len, "Payload length in bits")->capture_default_str();
    embed_cmd->add_option("--payload-file", payload_file, "ASCII 0/1 payload instead of the key stream");
    embed_cmd->add_option("--stats", stats_path, "Dataset statistics JSON (required in adaptive mode)");
    embed_cmd->add_flag("--non-adaptive", non_adaptive, "Fixed alpha0 for every block");
    embed_cmd->add_option("--config", config_path, "Embedding configuration JSON");
    embed_cmd->add_option("--out", out)->required();
    embed_cmd->add_option("--report", report_path, "Write the embedding report as JSON");
    embed_cmd->add_option("--dump-subbands", dump_dir, "Write normalised subband images (debug)");

    // extract
    std::string confidence_path;
    auto* extract_cmd = app.add_subcommand("extract", "Extract a watermark (blind)");
    extract_cmd->add_option("--image", image_path)->required();
    extract_cmd->add_option("--key", key_hex, "Key used to report BER against its key stream");
    extract_cmd->add_option("--payload-len", payload_len)->capture_default_str();
    extract_cmd->add_option("--config", config_path);
    extract_cmd->add_option("--out", out, "ASCII 0/1 output")->required();
    extract_cmd->add_option("--confidence", confidence_path, "Per-bit voting confidence as JSON");

    // attack
    std::string spec;
    std::uint64_t seed = 0;
    auto* attack_cmd = app.add_subcommand("attack", "Apply one attack");
    attack_cmd->add_option("--image", image_path)->required();
    attack_cmd->add_option("--spec", spec, "e.g. jpeg:70, rotate:1, crop:0.25, gn:0.005")->required();
    attack_cmd->add_option("--seed", seed, "Seed for noise attacks")->capture_default_str();
    attack_cmd->add_option("--out", out)->required();

    // evaluate
    std::string keys_text, attacks_text, csv_path, json_path;
    unsigned threads = 0;
    auto* eval_cmd = app.add_subcommand("evaluate", "Embed/attack/extract one image with several keys");
    eval_cmd->add_option("--image", image_path)->required();
    eval_cmd->add_option("--keys", keys_text, "Key count N or comma-separated hex keys")->required();
    eval_cmd->add_option("--attacks", attacks_text, "Comma-separated attack list or 'all'")->default_val("");
    eval_cmd->add_option("--stats", stats_path)->required();
    eval_cmd->add_option("--config", config_path);
    eval_cmd->add_flag("--non-adaptive", non_adaptive);
    eval_cmd->add_option("--payload-len", payload_len)->capture_default_str();
    eval_cmd->add_option("--seed", seed, "Key derivation and noise seed")->capture_default_str();
    eval_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
    eval_cmd->add_option("--csv", csv_path)->required();
    eval_cmd->add_option("--json", json_path);

    // bench
    std::size_t runs = 20;
    bool compare = false;
    auto* bench_cmd = app.add_subcommand("bench", "Corpus benchmark, optionally adaptive vs non-adaptive");
    bench_cmd->add_option("--dataset", dataset)->required();
    bench_cmd->add_option("--runs", runs, "Keys per image")->capture_default_str();
    bench_cmd->add_option("--attacks", attacks_text, "Comma-separated attack list or 'all'")->default_val("all");
    bench_cmd->add_flag("--compare-modes", compare, "Run both modes and report the difference");
    bench_cmd->add_option("--stats", stats_path, "Dataset statistics JSON (default: computed from --dataset)");
    bench_cmd->add_option("--config", config_path);
    bench_cmd->add_flag("--non-adaptive", non_adaptive, "Without --compare-modes: run the fixed mode");
    bench_cmd->add_option("--payload-len", payload_len)->capture_default_str();
    bench_cmd->add_option("--seed", seed)->capture_default_str();
    bench_cmd->add_option("--threads", threads);
    bench_cmd->add_option("--csv", csv_path);
    bench_cmd->add_option("--json", json_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*stats_cmd) {
            const auto corpus = load_corpus(dataset);
            std::vector<double> means;
            for (const auto& item : corpus)
                means.push_back(image_mean_complexity(item.image));
            const auto stats = dataset_stats_from_means(means);
            write_text_file(out, stats_to_json(stats));
            std::printf("%zu images  mu_D %.4f  sigma_D %.4f\n", stats.image_count, stats.mu_d, stats.sigma_d);
        } else if (*embed_cmd) {
            auto config = load_config(config_path);
            if (non_adaptive)
                config.adaptive = false;
            DatasetStats stats;
            if (!stats_path.empty())
                stats = load_stats(stats_path);
            else if (config.adaptive)
                throw InputError("--stats is required in adaptive mode");
            const auto image = read_image(image_path);
            const auto key = SecretKey::parse_hex(key_hex);
            Watermark payload;
            if (!payload_file.empty()) {
                payload = parse_bits(read_text_file(payload_file));
                if (embed_cmd->count("--payload-len") > 0 && payload.size() != payload_len)
                    throw InputError("payload file holds " + std::to_string(payload.size()) + " bits, --payload-len is " +
                                     std::to_string(payload_len));
            } else {
                payload = keystream(key, payload_len);
            }
            const auto result = embed_payload(image, payload, config, stats);
            write_image(result.image, out);
            if (!report_path.empty())
                write_text_file(report_path, embed_report_to_json(result.report, config));
            if (!dump_dir.empty()) {
                dump_subbands(image, dump_dir, "cover");
                dump_subbands(result.image, dump_dir, "marked");
            }
            std::printf("embedded %zu bits (%s)  PSNR %.3f dB  SSIM %.5f\n", payload.size(),
                        config.adaptive ? "adaptive" : "non-adaptive", psnr(image, result.image),
                        ssim(image, result.image));
            print_scale("approx", result.report.approximate);
            for (std::size_t d = 0; d < result.report.details.size(); ++d)
                print_scale(("dir" + std::to_string(d)).c_str(), result.report.details[d]);
        } else if (*extract_cmd) {
            const auto config = load_config(config_path);
            const auto result = extract_image(read_image(image_path), payload_len, config);
            write_text_file(out, format_bits(result.payload) + "\n");
            if (!confidence_path.empty())
                write_text_file(confidence_path, extraction_to_json(result));
            if (!key_hex.empty()) {
                const auto sim = similarity(keystream(SecretKey::parse_hex(key_hex), payload_len), result.payload);
                std::printf("NC %.4f  BER %.4f\n", sim.nc, sim.ber);
            }
        } else if (*attack_cmd) {
            const auto attack = parse_attack(spec, seed);
            write_image(apply_attack(read_image(image_path), attack), out);
        } else if (*eval_cmd) {
            auto config = load_config(config_path);
            if (non_adaptive)
                config.adaptive = false;
            const NamedImage item{fs::path(image_path).filename().string(), read_image(image_path)};
            const auto keys = parse_keys(keys_text, seed);
            const auto attacks = parse_attack_list(attacks_text, seed);
            const auto report = evaluate(item, keys, attacks, config, load_stats(stats_path), {payload_len, threads});
            write_text_file(csv_path, to_csv(report));
            if (!json_path.empty())
                write_text_file(json_path, to_json(report));
            for (const auto& a : report.aggregates)
                std::printf("%-14s PSNR %.3f  SSIM %.5f  NC %.4f  BER %.4f\n", a.attack.c_str(), a.psnr, a.ssim, a.nc,
                            a.ber);
        } else if (*bench_cmd) {
            auto config = load_config(config_path);
            if (non_adaptive)
                config.adaptive = false;
            const auto corpus = load_corpus(dataset);
            DatasetStats stats;
            if (!stats_path.empty()) {
                stats = load_stats(stats_path);
            } else {
                std::vector<double> means;
                for (const auto& item : corpus)
                    means.push_back(image_mean_complexity(item.image));
                stats = dataset_stats_from_means(means);
            }
            const auto keys = derive_keys(seed, runs);
            const auto attacks = parse_attack_list(attacks_text, seed);
            const EvaluationOptions options{payload_len, threads};
            const auto t0 = std::chrono::steady_clock::now();
            std::string csv, json;
            std::vector<AggregateRow> summary;
            if (compare) {
                const auto cmp = compare_modes(corpus, keys, attacks, config, stats, options);
                csv = to_csv(cmp);
                json = to_json(cmp);
                summary = cmp.adaptive.aggregates;
                summary.insert(summary.end(), cmp.non_adaptive.aggregates.begin(), cmp.non_adaptive.aggregates.end());
            } else {
                const auto report = evaluate(corpus, keys, attacks, config, stats, options);
                csv = to_csv(report);
                json = to_json(report);
                summary = report.aggregates;
            }
            if (!csv_path.empty())
                write_text_file(csv_path, csv);
            if (!json_path.empty())
                write_text_file(json_path, json);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            for (const auto& a : summary)
                std::printf("%-12s %-14s PSNR %.3f  SSIM %.5f  NC %.4f  BER %.4f\n", a.mode.c_str(), a.attack.c_str(),
                            a.psnr, a.ssim, a.nc, a.ber);
            std::printf("%zu images x %zu keys in %.1f s\n", corpus.size(), keys.size(), secs);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
