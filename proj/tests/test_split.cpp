#include "weberseg/split.hpp"

#include "helpers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include <doctest.h>

using namespace weberseg;
using testutil::close_rel;
using testutil::oracle_boundaries;
using testutil::random_series;

namespace {

const std::vector<double> kSetC = {173, 172, 171, 170, 169, 168, 167,
                                   178, 177, 176, 175, 174, 173};

SplitConfig make_config(SplitMode mode, double k) {
    SplitConfig config;
    config.mode = mode;
    config.k = k;
    return config;
}

} // namespace

TEST_SUITE("split") {

TEST_CASE("three ascending values score the paper identity at the second gap") {
    const auto diags = diagnostics({0.0, 0.1, 1.1}, make_config(SplitMode::sorted, 0.1));
    REQUIRE(diags.size() == 2);
    CHECK(close_rel(diags[0].gap, 0.1, 1e-15));
    CHECK(close_rel(diags[1].gap, 1.0, 1e-15));
    CHECK(close_rel(diags[1].mean_gap, 0.55, 1e-15));
    CHECK(close_rel(diags[1].er, 2.0 / 1.1, 1e-12));
    CHECK(close_rel(diags[1].ihr, 1.0 / 0.9, 1e-12));
    CHECK(close_rel(diags[1].score, iir_from_k(0.1), 1e-12));
    CHECK(diags[1].split);
    CHECK_FALSE(diags[0].split);
}

TEST_CASE("an all-equal series has zero mean gap and never splits") {
    for (auto mode : {SplitMode::sorted, SplitMode::sequence}) {
        const auto diags = diagnostics({5.0, 5.0, 5.0}, make_config(mode, 0.1));
        REQUIRE(diags.size() == 2);
        for (const auto& d : diags) {
            CHECK(d.gap == 0.0);
            CHECK(d.mean_gap == 0.0);
            CHECK(d.er == 0.0);
            CHECK(d.score == 0.0);
            CHECK_FALSE(d.split);
        }
        const auto seg = split({5.0, 5.0, 5.0}, make_config(mode, 0.1));
        CHECK(seg.segments.size() == 1);
    }
}

TEST_CASE("edge-profile diagnostics in sequence order") {
    const auto diags = diagnostics(kSetC, make_config(SplitMode::sequence, 0.1));
    REQUIRE(diags.size() == 12);
    const double expected_gaps[] = {1, 1, 1, 1, 1, 1, 11, 1, 1, 1, 1, 1};
    for (std::size_t i = 0; i < diags.size(); ++i) {
        CHECK(diags[i].gap == expected_gaps[i]);
        CHECK(close_rel(diags[i].mean_gap, 22.0 / 12.0, 1e-12));
    }
    CHECK(close_rel(diags[6].score, 60.0 / 11.0, 1e-12));
    CHECK(diags[6].split);
    for (std::size_t i = 0; i < diags.size(); ++i) {
        if (i != 6) {
            CHECK(diags[i].score <= 12.0 / 22.0 * (1 + 1e-12));
            CHECK_FALSE(diags[i].split);
        }
    }
}

TEST_CASE("edge profile splits into its two plateau ramps") {
    const auto seg = split(kSetC, make_config(SplitMode::sequence, 0.1));
    REQUIRE(seg.segments.size() == 2);
    CHECK(seg.segments[0] == IndexRange{0, 7});
    CHECK(seg.segments[1] == IndexRange{7, 13});
    CHECK(seg.boundaries == std::vector<std::size_t>{7});
    const auto parts = seg.segment_values();
    CHECK(parts[0] == std::vector<double>{173, 172, 171, 170, 169, 168, 167});
    CHECK(parts[1] == std::vector<double>{178, 177, 176, 175, 174, 173});
}

TEST_CASE("a gap scoring exactly the threshold fires") {
    const auto seg = split({0.0, 0.05, 1.05}, make_config(SplitMode::sorted, 0.05));
    REQUIRE(seg.segments.size() == 2);
    const auto parts = seg.segment_values();
    CHECK(parts[0] == std::vector<double>{0.0, 0.05});
    CHECK(parts[1] == std::vector<double>{1.05});
}

TEST_CASE("a single element is a single segment") {
    SplitConfig config = make_config(SplitMode::sorted, 0.1);
    const auto seg = split({42.0}, config);
    REQUIRE(seg.segments.size() == 1);
    CHECK(seg.segments[0] == IndexRange{0, 1});
    CHECK(seg.boundaries.empty());
    CHECK(seg.diagnostics.empty());
    CHECK(diagnostics({42.0}, config).empty());
}

TEST_CASE("input validation") {
    SplitConfig config = make_config(SplitMode::sorted, 0.1);
    CHECK_THROWS_AS(split({}, config), std::invalid_argument);
    CHECK_THROWS_WITH_AS(split({1.0, std::numeric_limits<double>::quiet_NaN(), 3.0}, config),
                         doctest::Contains("index 1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(split({1.0, 2.0, std::numeric_limits<double>::infinity()}, config),
                         doctest::Contains("index 2"), std::invalid_argument);

    SplitConfig bad_unit = config;
    bad_unit.unit = -0.5;
    CHECK_THROWS_AS(split({1.0, 2.0}, bad_unit), std::invalid_argument);

    SplitConfig bad_min = config;
    bad_min.min_segment = 0;
    CHECK_THROWS_AS(split({1.0, 2.0}, bad_min), std::invalid_argument);

    SplitConfig bad_k = config;
    bad_k.k = 1.0;
    CHECK_THROWS_AS(split({1.0, 2.0}, bad_k), std::invalid_argument);
}

TEST_CASE("quantization is applied before scoring") {
    SplitConfig config = make_config(SplitMode::sequence, 0.1);
    config.unit = 1.0;
    const auto seg = split({172.6, 171.9, 167.2}, config);
    CHECK(seg.values == std::vector<double>{173, 172, 167});
}

TEST_CASE("sorting is stable across duplicates") {
    const auto seg = split({3.0, 1.0, 2.0, 1.0}, make_config(SplitMode::sorted, 0.1));
    CHECK(seg.values == std::vector<double>{1, 1, 2, 3});
    CHECK(seg.order == std::vector<std::size_t>{1, 3, 2, 0});
}

TEST_CASE("three_value_case splits off the top value") {
    SUBCASE("k = 0.1") {
        const auto seg = three_value_case(1.0, 0.1);
        REQUIRE(seg.segments.size() == 2);
        const auto parts = seg.segment_values();
        CHECK(parts[0] == std::vector<double>{0.0, 0.1});
        CHECK(parts[1] == std::vector<double>{1.1});
    }
    SUBCASE("k = 0.01 at background 100") {
        const auto seg = three_value_case(100.0, 0.01);
        REQUIRE(seg.segments.size() == 2);
        const auto parts = seg.segment_values();
        CHECK(parts[0] == std::vector<double>{0.0, 1.0});
        CHECK(parts[1] == std::vector<double>{101.0});
    }
    SUBCASE("the second gap fires for any k, including near the boundary") {
        const auto seg = three_value_case(1.0, 0.999);
        CHECK(std::find(seg.boundaries.begin(), seg.boundaries.end(), 2) !=
              seg.boundaries.end());
        CHECK(seg.segment_values().back() == std::vector<double>{1.999});
        // from k = 0.5 upward the leading gap reaches the threshold as well
        // (its score 2k/(1+k) meets IIR = 2(1-k)/(1+k) exactly when k >= 1-k),
        // so the triple separates into three parts here
        CHECK(seg.segments.size() == 3);
    }
    SUBCASE("rejects k outside (0, 1)") {
        CHECK_THROWS_AS(three_value_case(1.0, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(three_value_case(1.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(three_value_case(0.0, 0.1), std::invalid_argument);
    }
}

TEST_CASE("recursion re-scores inside segments with their own mean") {
    SplitConfig config = make_config(SplitMode::sorted, 0.1);
    const std::vector<double> series = {0, 1, 2, 3, 10, 1000};

    const auto single = split(series, config);
    CHECK(single.boundaries == std::vector<std::size_t>{5});

    config.recursive = true;
    const auto rec = split(series, config);
    CHECK(rec.boundaries == std::vector<std::size_t>{4, 5});
    const auto parts = rec.segment_values();
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == std::vector<double>{0, 1, 2, 3});
    CHECK(parts[1] == std::vector<double>{10});
    CHECK(parts[2] == std::vector<double>{1000});
}

TEST_CASE("undersized segments merge across the smaller adjoining gap") {
    SUBCASE("a leading singleton merges right") {
        SplitConfig config = make_config(SplitMode::sorted, 0.1);
        const std::vector<double> series = {0, 10, 10.5, 11};
        CHECK(split(series, config).segments.size() == 2);
        config.min_segment = 2;
        const auto seg = split(series, config);
        REQUIRE(seg.segments.size() == 1);
        CHECK(seg.segments[0] == IndexRange{0, 4});
        CHECK(seg.boundaries.empty());
    }
    SUBCASE("a middle singleton prefers the smaller gap") {
        SplitConfig config = make_config(SplitMode::sorted, 0.35);
        const std::vector<double> series = {0, 1, 101, 301};
        const auto plain = split(series, config);
        REQUIRE(plain.segments.size() == 3); // {0,1} {101} {301}
        config.min_segment = 2;
        const auto seg = split(series, config);
        REQUIRE(seg.segments.size() == 2);
        CHECK(seg.segment_values()[0] == std::vector<double>{0, 1, 101});
        CHECK(seg.segment_values()[1] == std::vector<double>{301});
    }
    SUBCASE("equal adjoining gaps merge left") {
        SplitConfig config = make_config(SplitMode::sorted, 0.0);
        const std::vector<double> series = {0, 1, 2, 102, 103, 203, 204};
        const auto plain = split(series, config);
        REQUIRE(plain.segments.size() == 3); // {0,1,2} {102,103} {203,204}
        config.min_segment = 3;
        // middle merges left on the tie, the trailing pair then merges left too
        const auto seg = split(series, config);
        CHECK(seg.segments.size() == 1);
    }
}

TEST_CASE("property: score reduces to er/ihr wherever the rate is defined") {
    std::mt19937_64 rng(91);
    for (int t = 0; t < 500; ++t) {
        const auto series = random_series(rng, 2, 24, -100.0, 100.0);
        const auto mode = t % 2 == 0 ? SplitMode::sorted : SplitMode::sequence;
        for (const auto& d : diagnostics(series, make_config(mode, 0.1))) {
            CHECK(d.score <= d.er * (1 + 1e-12));
            if (d.gap > d.former_gap && d.mean_gap > 0.0) {
                CHECK(close_rel(d.er / d.ihr, d.score, 1e-12));
            } else {
                CHECK(std::isinf(d.ihr));
            }
        }
    }
}

TEST_CASE("property: three-value theorem over random backgrounds and thresholds") {
    std::mt19937_64 rng(92);
    std::uniform_real_distribution<double> intensity(0.001, 1e6);
    std::uniform_real_distribution<double> ratio(0.001, 0.999);
    for (int t = 0; t < 1000; ++t) {
        const double background = intensity(rng);
        const double data_k = ratio(rng);
        const double threshold_k = ratio(rng);
        const WeberTriple triple = WeberTriple::from_params(background, WeberParams(data_k));
        const auto values = triple.values();
        const auto diags =
            diagnostics(std::vector<double>(values.begin(), values.end()),
                        make_config(SplitMode::sorted, threshold_k));
        REQUIRE(diags.size() == 2);
        CHECK(close_rel(diags[1].score, iir_from_k(data_k), 1e-9));
        CHECK(diags[1].split == (threshold_k >= data_k));
    }
}

TEST_CASE("property: affine transforms leave boundaries unchanged") {
    std::mt19937_64 rng(93);
    std::uniform_real_distribution<double> scale(0.01, 100.0);
    std::uniform_real_distribution<double> shift(-1000.0, 1000.0);
    for (int t = 0; t < 250; ++t) {
        const auto series = random_series(rng, 2, 16, -100.0, 100.0);
        const double a = scale(rng);
        const double b = shift(rng);
        std::vector<double> transformed(series.size());
        for (std::size_t i = 0; i < series.size(); ++i) {
            transformed[i] = a * series[i] + b;
        }
        for (auto mode : {SplitMode::sorted, SplitMode::sequence}) {
            const auto config = make_config(mode, 0.1);
            const auto base = split(series, config);
            const auto moved = split(transformed, config);
            CHECK(base.boundaries == moved.boundaries);
            CHECK(base.segments == moved.segments);
        }
    }
}

TEST_CASE("property: sorted-mode boundaries ignore input order") {
    std::mt19937_64 rng(94);
    for (int t = 0; t < 250; ++t) {
        auto series = random_series(rng, 2, 16, -50.0, 50.0);
        const auto config = make_config(SplitMode::sorted, 0.1);
        const auto base = split(series, config);
        std::shuffle(series.begin(), series.end(), rng);
        const auto shuffled = split(series, config);
        CHECK(base.boundaries == shuffled.boundaries);
        CHECK(base.values == shuffled.values);
    }
}

TEST_CASE("property: segments cover the processed series exactly") {
    std::mt19937_64 rng(95);
    for (int t = 0; t < 250; ++t) {
        const auto series = random_series(rng, 1, 16, -50.0, 50.0);
        for (auto mode : {SplitMode::sorted, SplitMode::sequence}) {
            const auto seg = split(series, make_config(mode, 0.05));
            std::vector<double> glued;
            for (const auto& part : seg.segment_values()) {
                glued.insert(glued.end(), part.begin(), part.end());
            }
            CHECK(glued == seg.values);
            if (mode == SplitMode::sequence) {
                CHECK(seg.values == series);
            } else {
                auto sorted = series;
                std::sort(sorted.begin(), sorted.end());
                CHECK(seg.values == sorted);
            }
            CHECK(seg.segments.size() == seg.boundaries.size() + 1);
        }
    }
}

TEST_CASE("property: sorted gaps sum to the series range") {
    std::mt19937_64 rng(96);
    for (int t = 0; t < 250; ++t) {
        const auto series = random_series(rng, 2, 20, -1000.0, 1000.0);
        const auto diags = diagnostics(series, make_config(SplitMode::sorted, 0.1));
        double total = 0.0;
        for (const auto& d : diags) {
            total += d.gap;
        }
        const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
        CHECK(close_rel(total, *hi - *lo, 1e-12));
    }
}

TEST_CASE("property: single-pass split agrees with the direct-formula oracle") {
    std::mt19937_64 rng(97);
    std::uniform_real_distribution<double> ks(0.0, 0.9);
    for (int t = 0; t < 1000; ++t) {
        const auto series = random_series(rng, 3, 8, -100.0, 100.0);
        const double k = ks(rng);
        const bool sorted = t % 2 == 0;
        const auto seg =
            split(series, make_config(sorted ? SplitMode::sorted : SplitMode::sequence, k));
        CHECK(seg.boundaries == oracle_boundaries(series, sorted, k));
    }
}

} // TEST_SUITE
