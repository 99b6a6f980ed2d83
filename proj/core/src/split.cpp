#include "weberseg/split.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace weberseg {

namespace {

// The three-value triple scores exactly IIR; a few ulps of headroom keep the
// inclusive comparison inclusive after rounding in the gap arithmetic.
constexpr double kThresholdSlack = 1e-12;

bool reaches_threshold(double score, double iir) {
    return score >= iir * (1.0 - kThresholdSlack);
}

void validate_config(const SplitConfig& config) {
    WeberParams params(config.k); // rejects k outside [0, 1)
    (void)params;
    if (config.unit && !(*config.unit > 0.0)) {
        throw std::invalid_argument("split: quantization unit must be > 0");
    }
    if (config.min_segment < 1) {
        throw std::invalid_argument("split: min_segment must be >= 1");
    }
}

struct ProcessedSeries {
    std::vector<double> values;
    std::vector<std::size_t> order;
};

ProcessedSeries process_series(const std::vector<double>& series, const SplitConfig& config) {
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (!std::isfinite(series[i])) {
            throw std::invalid_argument("split: non-finite value at index " + std::to_string(i));
        }
    }
    ProcessedSeries out;
    out.values = series;
    if (config.unit) {
        for (double& v : out.values) {
            v = quantize(v, *config.unit);
        }
    }
    out.order.resize(out.values.size());
    std::iota(out.order.begin(), out.order.end(), std::size_t{0});
    if (config.mode == SplitMode::sorted) {
        std::stable_sort(out.order.begin(), out.order.end(),
                         [&](std::size_t a, std::size_t b) { return out.values[a] < out.values[b]; });
        std::vector<double> sorted(out.values.size());
        for (std::size_t i = 0; i < out.order.size(); ++i) {
            sorted[i] = out.values[out.order[i]];
        }
        out.values = std::move(sorted);
    }
    return out;
}

std::vector<double> adjacent_gaps(const double* values, std::size_t count) {
    std::vector<double> gaps;
    if (count >= 2) {
        gaps.reserve(count - 1);
        for (std::size_t i = 1; i < count; ++i) {
            gaps.push_back(std::fabs(values[i] - values[i - 1]));
        }
    }
    return gaps;
}

// Diagnostics over a contiguous block of processed values. base_gap_index
// offsets the reported 1-based gap positions for recursion into segments.
std::vector<GapDiagnostic> score_block(const double* values, std::size_t count, double iir,
                                       std::size_t base_gap_index) {
    std::vector<GapDiagnostic> diags;
    const std::vector<double> gaps = adjacent_gaps(values, count);
    if (gaps.empty()) {
        return diags;
    }
    const double mean_gap = std::accumulate(gaps.begin(), gaps.end(), 0.0) /
                            static_cast<double>(gaps.size());
    diags.reserve(gaps.size());
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        GapDiagnostic d;
        d.index = base_gap_index + i + 1;
        d.gap = gaps[i];
        d.former_gap = i == 0 ? 0.0 : gaps[i - 1];
        d.mean_gap = mean_gap;
        if (mean_gap > 0.0) {
            d.er = d.gap / mean_gap;
            d.score = (d.gap - d.former_gap) / mean_gap;
        }
        d.ihr = d.gap > d.former_gap ? d.gap / (d.gap - d.former_gap)
                                     : std::numeric_limits<double>::infinity();
        d.split = mean_gap > 0.0 && reaches_threshold(d.score, iir);
        diags.push_back(d);
    }
    return diags;
}

// 0-based start offsets of the segments a single pass produces inside
// [first, last) of values.
std::vector<std::size_t> block_boundaries(const std::vector<double>& values, std::size_t first,
                                          std::size_t last, double iir) {
    std::vector<std::size_t> starts;
    const auto diags = score_block(values.data() + first, last - first, iir, first);
    for (const auto& d : diags) {
        if (d.split) {
            starts.push_back(d.index); // 1-based gap == 0-based start of right part
        }
    }
    return starts;
}

} // namespace

std::vector<std::vector<double>> Segmentation::segment_values() const {
    std::vector<std::vector<double>> out;
    out.reserve(segments.size());
    for (const auto& seg : segments) {
        out.emplace_back(values.begin() + static_cast<std::ptrdiff_t>(seg.first),
                         values.begin() + static_cast<std::ptrdiff_t>(seg.last));
    }
    return out;
}

std::vector<GapDiagnostic> diagnostics(const std::vector<double>& series,
                                       const SplitConfig& config) {
    validate_config(config);
    const ProcessedSeries processed = process_series(series, config);
    return score_block(processed.values.data(), processed.values.size(), iir_from_k(config.k), 0);
}

Segmentation split(const std::vector<double>& series, const SplitConfig& config) {
    validate_config(config);
    if (series.empty()) {
        throw std::invalid_argument("split: series must not be empty");
    }
    const double iir = iir_from_k(config.k);

    Segmentation seg;
    ProcessedSeries processed = process_series(series, config);
    seg.values = std::move(processed.values);
    seg.order = std::move(processed.order);
    seg.diagnostics = score_block(seg.values.data(), seg.values.size(), iir, 0);

    std::vector<std::size_t> starts; // 0-based segment starts, excluding 0
    for (const auto& d : seg.diagnostics) {
        if (d.split) {
            starts.push_back(d.index);
        }
    }

    if (config.recursive) {
        // Re-score each segment in isolation until no segment splits further.
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::size_t> cuts{0};
            cuts.insert(cuts.end(), starts.begin(), starts.end());
            cuts.push_back(seg.values.size());
            for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
                if (cuts[s + 1] - cuts[s] < 3) {
                    continue;
                }
                auto inner = block_boundaries(seg.values, cuts[s], cuts[s + 1], iir);
                if (!inner.empty()) {
                    starts.insert(starts.end(), inner.begin(), inner.end());
                    grew = true;
                }
            }
            std::sort(starts.begin(), starts.end());
        }
    }

    // Materialize segments from the cut offsets.
    std::vector<std::size_t> cuts{0};
    cuts.insert(cuts.end(), starts.begin(), starts.end());
    cuts.push_back(seg.values.size());
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        seg.segments.push_back({cuts[s], cuts[s + 1]});
    }

    // Merge undersized segments into the neighbour across the smaller
    // adjoining gap; ties merge left. Left-to-right until stable.
    if (config.min_segment > 1) {
        bool merged = true;
        while (merged && seg.segments.size() > 1) {
            merged = false;
            for (std::size_t s = 0; s < seg.segments.size(); ++s) {
                if (seg.segments[s].size() >= config.min_segment) {
                    continue;
                }
                const bool has_left = s > 0;
                const bool has_right = s + 1 < seg.segments.size();
                bool merge_left;
                if (has_left && has_right) {
                    const double left_gap = std::fabs(seg.values[seg.segments[s].first] -
                                                      seg.values[seg.segments[s].first - 1]);
                    const double right_gap = std::fabs(seg.values[seg.segments[s].last] -
                                                       seg.values[seg.segments[s].last - 1]);
                    merge_left = left_gap <= right_gap;
                } else {
                    merge_left = has_left;
                }
                if (merge_left) {
                    seg.segments[s - 1].last = seg.segments[s].last;
                    seg.segments.erase(seg.segments.begin() + static_cast<std::ptrdiff_t>(s));
                } else {
                    seg.segments[s].last = seg.segments[s + 1].last;
                    seg.segments.erase(seg.segments.begin() + static_cast<std::ptrdiff_t>(s + 1));
                }
                merged = true;
                break;
            }
        }
    }

    seg.boundaries.clear();
    for (std::size_t s = 1; s < seg.segments.size(); ++s) {
        seg.boundaries.push_back(seg.segments[s].first);
    }
    return seg;
}

Segmentation three_value_case(double background, double k) {
    if (!(k > 0.0) || !(k < 1.0)) {
        throw std::invalid_argument("three_value_case: k must lie in (0, 1), got " +
                                    std::to_string(k));
    }
    const WeberTriple triple = WeberTriple::from_params(background, WeberParams(k));
    const auto values = triple.values();
    SplitConfig config;
    config.mode = SplitMode::sorted;
    config.k = k;
    return split(std::vector<double>(values.begin(), values.end()), config);
}

} // namespace weberseg
