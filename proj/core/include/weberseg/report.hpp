#pragma once

#include "weberseg/split.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace weberseg {

// Flat, serialization-ready view of one segmentation run.
struct SplitReport {
    std::string mode;
    double k = 0.0;
    double iir = 0.0;
    std::vector<GapDiagnostic> gaps;
    std::vector<std::vector<double>> segments; // value lists, in order
    std::vector<std::size_t> boundaries;       // 1-based gap indices
};

SplitReport make_report(const Segmentation& segmentation, const SplitConfig& config);

/// JSON document with fields mode, k, iir, gaps, segments, boundaries.
/// Each gap carries index, gap, er, ihr, score, split; an undefined
/// inhibitory rate is serialized as the string "inf". Numbers round-trip
/// losslessly.
std::string to_json(const SplitReport& report);

SplitReport report_from_json(const std::string& text);

void print_text(std::ostream& out, const SplitReport& report);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

} // namespace weberseg
