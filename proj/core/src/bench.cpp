#include "lcvwm/bench.hpp"

#include "json_conv.hpp"
#include "lcvwm/error.hpp"
#include "lcvwm/image_io.hpp"
#include "lcvwm/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <thread>

namespace lcvwm {
namespace {

using detail::Json;

std::string fmt(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string hex64(std::uint64_t v) { return SecretKey{v}.to_hex(); }

const char* mode_name(bool adaptive) { return adaptive ? "adaptive" : "non_adaptive"; }

std::uint64_t splitmix(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Runs fn(i) for i in [0, n) on a small pool. Exceptions are rethrown in job
// order after all workers finished.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

std::vector<EvaluationRow> run_job(const NamedImage& item, SecretKey key, std::span<const AttackSpec> attacks,
                                   std::span<const std::string> attack_names, const EmbedConfig& config,
                                   const DatasetStats& stats, std::size_t payload_length) {
    const Watermark payload = keystream(key, payload_length);
    const auto embedded = embed_payload(item.image, payload, config, stats);

    EvaluationRow base;
    base.mode = mode_name(config.adaptive);
    base.image = item.name;
    base.key = key.to_hex();
    base.psnr = psnr(item.image, embedded.image);
    base.ssim = ssim(item.image, embedded.image);
    base.alpha_approx = embedded.report.approximate.alpha_mean;
    double detail = 0.0;
    for (const auto& d : embedded.report.details)
        detail += d.alpha_mean;
    base.alpha_detail = detail / static_cast<double>(embedded.report.details.size());

    auto score = [&](const GrayImage& received, const std::string& attack) {
        EvaluationRow row = base;
        row.attack = attack;
        const auto sim = similarity(payload, extract_image(received, payload_length, config).payload);
        row.nc = sim.nc;
        row.ber = sim.ber;
        return row;
    };

    std::vector<EvaluationRow> rows;
    rows.reserve(attacks.size() + 1);
    rows.push_back(score(embedded.image, kNoAttack));
    for (std::size_t a = 0; a < attacks.size(); ++a)
        rows.push_back(score(apply_attack(embedded.image, attacks[a]), attack_names[a]));
    return rows;
}

Json to_json_value(const EvaluationReport& r) {
    Json j;
    j["mode"] = mode_name(r.config.adaptive);
    j["config"] = detail::to_json(r.config);
    j["stats"] = detail::to_json(r.stats);
    j["payload_length"] = r.payload_length;
    j["keys"] = r.keys;
    j["attacks"] = r.attacks;
    Json manifest = Json::array();
    for (const auto& m : r.manifest) {
        Json e;
        e["name"] = m.name;
        e["width"] = m.width;
        e["height"] = m.height;
        e["fnv1a64"] = hex64(m.hash);
        manifest.push_back(std::move(e));
    }
    j["manifest"] = std::move(manifest);
    Json aggregates = Json::array();
    for (const auto& a : r.aggregates) {
        Json e;
        e["mode"] = a.mode;
        e["attack"] = a.attack;
        e["runs"] = a.runs;
        e["psnr"] = detail::number(a.psnr);
        e["ssim"] = detail::number(a.ssim);
        e["nc"] = detail::number(a.nc);
        e["ber"] = detail::number(a.ber);
        aggregates.push_back(std::move(e));
    }
    j["aggregates"] = std::move(aggregates);
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json e;
        e["image"] = row.image;
        e["key"] = row.key;
        e["attack"] = row.attack;
        e["psnr"] = detail::number(row.psnr);
        e["ssim"] = detail::number(row.ssim);
        e["nc"] = detail::number(row.nc);
        e["ber"] = detail::number(row.ber);
        e["alpha_approx"] = detail::number(row.alpha_approx);
        e["alpha_detail"] = detail::number(row.alpha_detail);
        rows.push_back(std::move(e));
    }
    j["rows"] = std::move(rows);
    return j;
}

}  // namespace

std::vector<NamedImage> load_corpus(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw InputError("not a directory: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file())
            continue;
        auto ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
        if (ext == ".png" || ext == ".pgm")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw InputError("no .png or .pgm images in " + dir.string());
    std::vector<NamedImage> corpus;
    corpus.reserve(files.size());
    for (const auto& f : files)
        corpus.push_back({f.filename().string(), read_image(f)});
    return corpus;
}

std::vector<SecretKey> derive_keys(std::uint64_t seed, std::size_t count) {
    std::vector<SecretKey> keys;
    keys.reserve(count);
    std::uint64_t state = seed;
    while (keys.size() < count) {
        const SecretKey k{splitmix(state)};
        if (std::find(keys.begin(), keys.end(), k) == keys.end())
            keys.push_back(k);
    }
    return keys;
}

std::uint64_t image_hash(const GrayImage& image) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto b : image.samples()) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

EvaluationReport evaluate(std::span<const NamedImage> corpus, std::span<const SecretKey> keys,
                          std::span<const AttackSpec> attacks, const EmbedConfig& config,
                          const DatasetStats& stats, const EvaluationOptions& options) {
    config.validate();
    if (keys.empty())
        throw InputError("evaluate needs at least one key");
    if (options.payload_length == 0)
        throw InputError("payload length must be positive");
    for (const auto& a : attacks)
        validate(a);

    EvaluationReport report;
    report.config = config;
    report.stats = stats;
    report.payload_length = options.payload_length;
    for (const auto& k : keys)
        report.keys.push_back(k.to_hex());
    for (const auto& a : attacks)
        report.attacks.push_back(to_string(a));
    for (const auto& item : corpus)
        report.manifest.push_back({item.name, item.image.width(), item.image.height(), image_hash(item.image)});

    const std::size_t jobs = corpus.size() * keys.size();
    std::vector<std::vector<EvaluationRow>> results(jobs);
    parallel_for(jobs, options.threads, [&](std::size_t j) {
        const auto& item = corpus[j / keys.size()];
        results[j] = run_job(item, keys[j % keys.size()], attacks, report.attacks, config, stats,
                             options.payload_length);
    });
    for (auto& part : results)
        std::move(part.begin(), part.end(), std::back_inserter(report.rows));
    report.aggregates = aggregate(report.rows);
    return report;
}

EvaluationReport evaluate(const NamedImage& image, std::span<const SecretKey> keys,
                          std::span<const AttackSpec> attacks, const EmbedConfig& config,
                          const DatasetStats& stats, const EvaluationOptions& options) {
    return evaluate(std::span<const NamedImage>(&image, 1), keys, attacks, config, stats, options);
}

ModeComparison compare_modes(std::span<const NamedImage> corpus, std::span<const SecretKey> keys,
                             std::span<const AttackSpec> attacks, const EmbedConfig& config,
                             const DatasetStats& stats, const EvaluationOptions& options) {
    EmbedConfig adaptive = config;
    adaptive.adaptive = true;
    EmbedConfig fixed = config;
    fixed.adaptive = false;

    ModeComparison out;
    out.adaptive = evaluate(corpus, keys, attacks, adaptive, stats, options);
    out.non_adaptive = evaluate(corpus, keys, attacks, fixed, stats, options);
    for (std::size_t i = 0; i < out.adaptive.aggregates.size(); ++i) {
        const auto& a = out.adaptive.aggregates[i];
        const auto& n = out.non_adaptive.aggregates[i];
        out.diff.push_back({a.attack, a.psnr - n.psnr, a.ssim - n.ssim, a.nc - n.nc, a.ber - n.ber});
    }
    return out;
}

std::vector<AggregateRow> aggregate(std::span<const EvaluationRow> rows) {
    std::vector<AggregateRow> out;
    for (const auto& row : rows) {
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const AggregateRow& a) { return a.mode == row.mode && a.attack == row.attack; });
        if (it == out.end()) {
            out.push_back({row.mode, row.attack});
            it = std::prev(out.end());
        }
        ++it->runs;
        it->psnr += row.psnr;
        it->ssim += row.ssim;
        it->nc += row.nc;
        it->ber += row.ber;
    }
    for (auto& a : out) {
        const auto n = static_cast<double>(a.runs);
        a.psnr /= n;
        a.ssim /= n;
        a.nc /= n;
        a.ber /= n;
    }
    return out;
}

std::string csv_header() { return "mode,image,key,attack,psnr,ssim,nc,ber,alpha_approx,alpha_detail\n"; }

std::string to_csv(const EvaluationReport& report, bool header) {
    std::string out = header ? csv_header() : std::string();
    for (const auto& r : report.rows) {
        out += r.mode + ',' + r.image + ',' + r.key + ',' + r.attack + ',' + fmt(r.psnr) + ',' + fmt(r.ssim) +
               ',' + fmt(r.nc) + ',' + fmt(r.ber) + ',' + fmt(r.alpha_approx) + ',' + fmt(r.alpha_detail) + '\n';
    }
    return out;
}

std::string to_csv(const ModeComparison& comparison) {
    return to_csv(comparison.adaptive, true) + to_csv(comparison.non_adaptive, false);
}

std::string to_json(const EvaluationReport& report) { return to_json_value(report).dump(2) + "\n"; }

std::string to_json(const ModeComparison& comparison) {
    Json j;
    j["adaptive"] = to_json_value(comparison.adaptive);
    j["non_adaptive"] = to_json_value(comparison.non_adaptive);
    Json diff = Json::array();
    for (const auto& d : comparison.diff) {
        Json e;
        e["attack"] = d.attack;
        e["delta_psnr"] = detail::number(d.delta_psnr);
        e["delta_ssim"] = detail::number(d.delta_ssim);
        e["delta_nc"] = detail::number(d.delta_nc);
        e["delta_ber"] = detail::number(d.delta_ber);
        diff.push_back(std::move(e));
    }
    j["diff"] = std::move(diff);
    return j.dump(2) + "\n";
}

}  // namespace lcvwm
