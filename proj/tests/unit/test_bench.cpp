#include "lcvwm/bench.hpp"
#include "lcvwm/error.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

namespace lcvwm {
namespace {

std::vector<NamedImage> small_corpus() {
    return {{"a.png", test::synthetic_image(256, 256, 1)}, {"b.png", test::synthetic_image(256, 256, 2)}};
}

DatasetStats stats_of(const std::vector<NamedImage>& corpus) {
    std::vector<double> means;
    for (const auto& c : corpus)
        means.push_back(image_mean_complexity(c.image));
    return dataset_stats_from_means(means);
}

TEST(DeriveKeys, DistinctAndDeterministic) {
    const auto a = derive_keys(0, 20), b = derive_keys(0, 20);
    EXPECT_EQ(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            EXPECT_NE(a[i], a[j]);
    EXPECT_NE(derive_keys(1, 1)[0], a[0]);
}

TEST(ImageHash, Fnv1a) {
    EXPECT_EQ(image_hash(GrayImage(1, 1, {'a'})), 0xaf63dc4c8601ec8cULL);
}

TEST(Evaluate, NoAttacksGivesFidelityRowsOnly) {
    const auto corpus = small_corpus();
    const auto keys = derive_keys(3, 2);
    const auto r = evaluate(corpus, keys, {}, EmbedConfig{}, stats_of(corpus), {64, 1});
    ASSERT_EQ(r.rows.size(), 4u);
    for (const auto& row : r.rows) {
        EXPECT_EQ(row.attack, kNoAttack);
        EXPECT_EQ(row.ber, 0.0);
        EXPECT_EQ(row.nc, 1.0);
        EXPECT_GT(row.psnr, 30.0);
    }
    EXPECT_EQ(r.rows[0].image, "a.png");
    EXPECT_EQ(r.rows[2].image, "b.png");
    EXPECT_EQ(r.manifest.size(), 2u);
}

TEST(Evaluate, RowCountsFollowProtocol) {
    const auto corpus = small_corpus();
    const auto keys = derive_keys(0, 3);
    const auto attacks = standard_attack_suite();
    const auto r = evaluate(corpus[0], keys, attacks, EmbedConfig{}, stats_of(corpus), {64, 1});
    EXPECT_EQ(r.rows.size(), 3u * 13u);
    std::size_t fidelity = 0;
    for (const auto& row : r.rows)
        fidelity += row.attack == kNoAttack;
    EXPECT_EQ(fidelity, 3u);
    EXPECT_EQ(r.aggregates.size(), 13u);
}

TEST(Evaluate, AggregatesAreRowMeans) {
    const auto corpus = small_corpus();
    const auto keys = derive_keys(0, 2);
    const auto attacks = parse_attack_list("jpeg:50,crop:0.25");
    const auto r = evaluate(corpus, keys, attacks, EmbedConfig{}, stats_of(corpus), {64, 1});
    for (const auto& agg : r.aggregates) {
        double ber = 0.0, psnr = 0.0;
        std::size_t n = 0;
        for (const auto& row : r.rows)
            if (row.attack == agg.attack) {
                ber += row.ber;
                psnr += row.psnr;
                ++n;
            }
        EXPECT_EQ(agg.runs, n);
        EXPECT_NEAR(agg.ber, ber / static_cast<double>(n), 1e-12);
        EXPECT_NEAR(agg.psnr, psnr / static_cast<double>(n), 1e-12);
    }
}

TEST(Evaluate, OutputIndependentOfThreadCount) {
    const auto corpus = small_corpus();
    const auto keys = derive_keys(5, 3);
    const auto attacks = parse_attack_list("gn:0.005,sp:0.01", 11);
    const auto one = evaluate(corpus, keys, attacks, EmbedConfig{}, stats_of(corpus), {64, 1});
    const auto four = evaluate(corpus, keys, attacks, EmbedConfig{}, stats_of(corpus), {64, 4});
    EXPECT_EQ(to_csv(one), to_csv(four));
    EXPECT_EQ(to_json(one), to_json(four));
}

TEST(Evaluate, RejectsEmptyKeys) {
    const auto corpus = small_corpus();
    EXPECT_THROW(evaluate(corpus, {}, {}, EmbedConfig{}, DatasetStats{}), InputError);
}

TEST(CompareModes, IdenticalWhenAdaptationIsDisabled) {
    // One-image dataset: alpha_i = alpha_0, so only S/T1/T2 could separate the modes.
    const std::vector<NamedImage> corpus{{"a.png", test::synthetic_image(256, 256, 1)}};
    EmbedConfig cfg;
    cfg.strength.scale = cfg.strength.lower = cfg.strength.upper = 1.0;
    const auto keys = derive_keys(0, 2);
    const auto attacks = parse_attack_list("jpeg:60");
    const auto cmp = compare_modes(corpus, keys, attacks, cfg, stats_of(corpus), {64, 1});
    ASSERT_EQ(cmp.adaptive.rows.size(), cmp.non_adaptive.rows.size());
    for (std::size_t i = 0; i < cmp.adaptive.rows.size(); ++i) {
        EXPECT_EQ(cmp.adaptive.rows[i].psnr, cmp.non_adaptive.rows[i].psnr);
        EXPECT_EQ(cmp.adaptive.rows[i].ber, cmp.non_adaptive.rows[i].ber);
    }
    for (const auto& d : cmp.diff) {
        EXPECT_EQ(d.delta_psnr, 0.0);
        EXPECT_EQ(d.delta_ber, 0.0);
    }
}

TEST(Reports, CsvColumnsAndJsonShape) {
    const auto corpus = small_corpus();
    const auto keys = derive_keys(0, 1);
    const auto cmp = compare_modes(corpus, keys, {}, EmbedConfig{}, stats_of(corpus), {64, 1});
    const auto csv = to_csv(cmp);
    EXPECT_EQ(csv.substr(0, csv.find('\n') + 1), csv_header());
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 2 * 2);
    EXPECT_NE(csv.find("non_adaptive,a.png"), std::string::npos);
    const auto json = to_json(cmp);
    for (const char* key : {"\"adaptive\"", "\"non_adaptive\"", "\"diff\"", "\"manifest\"", "\"fnv1a64\"", "\"config\""})
        EXPECT_NE(json.find(key), std::string::npos) << key;
}

}  // namespace
}  // namespace lcvwm
