#pragma once

#include "weberseg/weber.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace weberseg {

// The expanding algorithm: score every adjacent gap of a series against the
// IIR threshold derived from K and cut the series wherever the score reaches
// it. Values that sit consistently spaced stay together; a gap that expands
// abruptly relative to the series mean, and is not excused by an almost as
// large predecessor, marks a perceptual break.

enum class SplitMode {
    sorted,   // sort ascending first; gaps are value spacings
    sequence, // keep acquisition order; gaps are absolute adjacent differences
};

struct SplitConfig {
    SplitMode mode = SplitMode::sorted;
    double k = 0.1;
    bool recursive = false;       // re-score inside each segment until stable
    std::optional<double> unit;   // optional pre-quantization step, > 0
    std::size_t min_segment = 1;  // segments shorter than this merge into a neighbour
};

// Per-adjacent-pair record. Gap i (1-based) lies between elements i-1 and i
// of the processed series (0-based).
struct GapDiagnostic {
    std::size_t index = 0;   // 1-based gap position
    double gap = 0.0;        // |x[i] - x[i-1]|
    double former_gap = 0.0; // gap at index-1; 0 for the first gap
    double mean_gap = 0.0;   // arithmetic mean of all gaps
    double er = 0.0;         // gap / mean_gap; 0 when mean_gap == 0
    double ihr = 0.0;        // gap / (gap - former_gap) when gap > former_gap, else +inf
    double score = 0.0;      // (gap - former_gap) / mean_gap; 0 when mean_gap == 0
    bool split = false;      // score reached the configured threshold
};

// Contiguous 0-based half-open range of positions in the processed series.
struct IndexRange {
    std::size_t first = 0;
    std::size_t last = 0;

    std::size_t size() const noexcept { return last - first; }
    bool operator==(const IndexRange&) const = default;
};

struct Segmentation {
    // Processed series: quantized when a unit is configured and, in sorted
    // mode, stably sorted ascending.
    std::vector<double> values;
    // Disjoint contiguous cover of [0, values.size()).
    std::vector<IndexRange> segments;
    // 1-based gap indices where splits fired; equivalently the 0-based start
    // of every segment after the first.
    std::vector<std::size_t> boundaries;
    // First-pass diagnostics over the whole processed series.
    std::vector<GapDiagnostic> diagnostics;
    // values[i] == input[order[i]]; identity in sequence mode.
    std::vector<std::size_t> order;

    std::vector<std::vector<double>> segment_values() const;
};

/// One diagnostic per adjacent pair of the processed series. A series
/// shorter than two elements yields no diagnostics. Non-finite inputs are
/// rejected with the offending index.
std::vector<GapDiagnostic> diagnostics(const std::vector<double>& series,
                                       const SplitConfig& config);

/// Split the series into consistent segments. Single-pass by default; with
/// config.recursive the algorithm re-scores inside each segment of length
/// >= 3 (mean gap recomputed per segment) until no further splits fire.
/// Segments shorter than config.min_segment merge into the neighbour across
/// the smaller adjoining gap (tie merges left).
Segmentation split(const std::vector<double>& series, const SplitConfig& config);

/// Sorted-mode split of the triple (0, k*I, I + k*I) at threshold k.
/// The second gap of the triple scores exactly IIR(k), so it always fires.
Segmentation three_value_case(double background, double k);

} // namespace weberseg
