#include "weberseg/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace weberseg {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json ihr_to_json(double ihr) {
    if (std::isfinite(ihr)) {
        return ihr;
    }
    return "inf";
}

double ihr_from_json(const ordered_json& value) {
    if (value.is_string()) {
        if (value.get<std::string>() != "inf") {
            throw std::invalid_argument("report: unexpected ihr marker \"" +
                                        value.get<std::string>() + "\"");
        }
        return std::numeric_limits<double>::infinity();
    }
    return value.get<double>();
}

} // namespace

std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) {
        return "nan";
    }
    return std::string(buf, ptr);
}

SplitReport make_report(const Segmentation& segmentation, const SplitConfig& config) {
    SplitReport report;
    report.mode = config.mode == SplitMode::sorted ? "sorted" : "sequence";
    report.k = config.k;
    report.iir = iir_from_k(config.k);
    report.gaps = segmentation.diagnostics;
    report.segments = segmentation.segment_values();
    report.boundaries = segmentation.boundaries;
    return report;
}

std::string to_json(const SplitReport& report) {
    ordered_json doc;
    doc["mode"] = report.mode;
    doc["k"] = report.k;
    doc["iir"] = report.iir;
    ordered_json gaps = ordered_json::array();
    for (const auto& g : report.gaps) {
        ordered_json row;
        row["index"] = g.index;
        row["gap"] = g.gap;
        row["er"] = g.er;
        row["ihr"] = ihr_to_json(g.ihr);
        row["score"] = g.score;
        row["split"] = g.split;
        gaps.push_back(std::move(row));
    }
    doc["gaps"] = std::move(gaps);
    doc["segments"] = report.segments;
    doc["boundaries"] = report.boundaries;
    return doc.dump(2);
}

SplitReport report_from_json(const std::string& text) {
    const ordered_json doc = ordered_json::parse(text);
    SplitReport report;
    report.mode = doc.at("mode").get<std::string>();
    report.k = doc.at("k").get<double>();
    report.iir = doc.at("iir").get<double>();
    for (const auto& row : doc.at("gaps")) {
        GapDiagnostic g;
        g.index = row.at("index").get<std::size_t>();
        g.gap = row.at("gap").get<double>();
        g.er = row.at("er").get<double>();
        g.ihr = ihr_from_json(row.at("ihr"));
        g.score = row.at("score").get<double>();
        g.split = row.at("split").get<bool>();
        report.gaps.push_back(g);
    }
    report.segments = doc.at("segments").get<std::vector<std::vector<double>>>();
    report.boundaries = doc.at("boundaries").get<std::vector<std::size_t>>();
    return report;
}

void print_text(std::ostream& out, const SplitReport& report) {
    out << "mode: " << report.mode << '\n';
    out << "k: " << format_double(report.k) << '\n';
    out << "iir: " << format_double(report.iir) << '\n';
    out << "gaps (index gap er ihr score split):\n";
    for (const auto& g : report.gaps) {
        out << "  " << g.index << ' ' << format_double(g.gap) << ' ' << format_double(g.er)
            << ' ' << (std::isfinite(g.ihr) ? format_double(g.ihr) : "inf") << ' '
            << format_double(g.score) << ' ' << (g.split ? "split" : "-") << '\n';
    }
    out << "segments:\n";
    for (std::size_t i = 0; i < report.segments.size(); ++i) {
        out << "  " << i + 1 << ':';
        for (double v : report.segments[i]) {
            out << ' ' << format_double(v);
        }
        out << '\n';
    }
    out << "boundaries:";
    for (std::size_t b : report.boundaries) {
        out << ' ' << b;
    }
    out << '\n';
}

} // namespace weberseg
