#include "weberseg/weber.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace weberseg {

namespace {

void check_closed_unit_interval(double k, const char* what) {
    if (std::isnan(k) || k < 0.0) {
        throw std::invalid_argument(std::string(what) +
                                    ": k must be >= 0 (negative sense is excluded), got " +
                                    std::to_string(k));
    }
    if (k > 1.0) {
        throw std::invalid_argument(std::string(what) + ": k must be <= 1, got " +
                                    std::to_string(k));
    }
}

} // namespace

double er_formula(double k) {
    check_closed_unit_interval(k, "er_formula");
    return 2.0 / (1.0 + k);
}

double ihr_formula(double k) {
    check_closed_unit_interval(k, "ihr_formula");
    if (k == 1.0) {
        throw std::domain_error("ihr_formula: k = 1 is the no-sense regime, "
                                "the inhibitory rate diverges");
    }
    return 1.0 / (1.0 - k);
}

double iir_formula(double k) {
    check_closed_unit_interval(k, "iir_formula");
    return 2.0 * (1.0 - k) / (1.0 + k);
}

double iir_from_k(double k) {
    if (std::isnan(k) || k < 0.0) {
        throw std::invalid_argument("iir_from_k: k must be >= 0 (negative sense is excluded), got " +
                                    std::to_string(k));
    }
    if (k >= 1.0) {
        throw std::invalid_argument("iir_from_k: k must be < 1 (no-sense boundary), got " +
                                    std::to_string(k));
    }
    return iir_formula(k);
}

WeberParams::WeberParams(double k) : k_(k), iir_(iir_from_k(k)) {}

double er_for_triple(const WeberParams& params) {
    return er_formula(params.k());
}

double ihr_for_triple(const WeberParams& params) {
    return ihr_formula(params.k());
}

WeberTriple::WeberTriple(double background, double increment)
    : background_(background), increment_(increment) {
    if (!(background > 0.0) || !std::isfinite(background)) {
        throw std::invalid_argument("WeberTriple: background intensity must be > 0");
    }
    if (!(increment >= 0.0) || !std::isfinite(increment)) {
        throw std::invalid_argument("WeberTriple: increment must be >= 0");
    }
}

WeberTriple WeberTriple::from_params(double background, const WeberParams& params) {
    return WeberTriple(background, params.k() * background);
}

std::array<double, 3> WeberTriple::values() const noexcept {
    return {0.0, increment_, background_ + increment_};
}

std::vector<std::pair<double, double>> iir_table(const std::vector<double>& ks) {
    std::vector<std::pair<double, double>> rows;
    rows.reserve(ks.size());
    for (double k : ks) {
        rows.emplace_back(k, quantize(iir_formula(k), 0.01));
    }
    return rows;
}

std::vector<double> typical_ks() {
    return {0.0, 0.01, 0.05, 0.1, 1.0};
}

double quantize(double x, double unit) {
    if (!(unit > 0.0) || !std::isfinite(unit)) {
        throw std::invalid_argument("quantize: unit must be > 0, got " + std::to_string(unit));
    }
    if (!std::isfinite(x)) {
        throw std::invalid_argument("quantize: value must be finite");
    }
    const double q = x / unit;
    const double lower = std::floor(q);
    const double frac = q - lower;
    // Quotients within a few ulps of a half-integer are treated as exact
    // midpoints; decimal inputs like -0.015 at unit 0.01 otherwise land on
    // the wrong side after the lossy division.
    const double tol =
        4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(q));
    double steps;
    if (std::fabs(frac - 0.5) <= tol) {
        steps = q >= 0.0 ? lower + 1.0 : lower;
    } else {
        steps = std::round(q);
    }
    return steps * unit;
}

} // namespace weberseg
