#pragma once

#include <array>
#include <utility>
#include <vector>

namespace weberseg {

// Closed-form threshold calculus over the sensitivity constant K.
//
// K is the just-noticeable-difference ratio of an observer: the smallest
// increment it can sense over a background intensity, divided by that
// background. K = 0 would sense infinitesimal differences, K = 1 senses
// nothing. Splitting uses K in [0, 1); the raw evaluators additionally
// accept K = 1 so threshold tables can include the degenerate row.

/// Expansion ratio Er = 2/(1 + K). Accepts K in [0, 1].
double er_formula(double k);

/// Inhibitory rate Ihr = 1/(1 - K). Accepts K in [0, 1); K = 1 is the
/// no-sense regime where the rate diverges and is rejected.
double ihr_formula(double k);

/// Integrated inconsistent rate IIR = Er/Ihr = 2(1 - K)/(1 + K).
/// Accepts K in [0, 1]; strictly decreasing, IIR(0) = 2, IIR(1) = 0.
double iir_formula(double k);

/// IIR over the splitting domain K in [0, 1). Result lies in (0, 2].
double iir_from_k(double k);

// Validated sensitivity constant with its derived threshold.
class WeberParams {
public:
    explicit WeberParams(double k);

    double k() const noexcept { return k_; }
    double iir() const noexcept { return iir_; }

private:
    double k_;
    double iir_;
};

double er_for_triple(const WeberParams& params);
double ihr_for_triple(const WeberParams& params);

// The transformed three-value system (0, dI, I + dI) for a background
// intensity I and increment dI = K * I.
class WeberTriple {
public:
    WeberTriple(double background, double increment);

    static WeberTriple from_params(double background, const WeberParams& params);

    double background() const noexcept { return background_; }
    double increment() const noexcept { return increment_; }
    double k() const noexcept { return increment_ / background_; }

    /// The non-decreasing triple (0, dI, I + dI).
    std::array<double, 3> values() const noexcept;

private:
    double background_;
    double increment_;
};

/// (K, IIR) rows with IIR rounded to two decimals, halves away from zero.
/// Each K must lie in [0, 1]; K = 1 yields the row (1, 0.00).
std::vector<std::pair<double, double>> iir_table(const std::vector<double>& ks);

/// The canonical K values for the typical-threshold table: 0, 0.01, 0.05, 0.1, 1.
std::vector<double> typical_ks();

/// Round x to the nearest integer multiple of unit, halves away from zero.
/// unit must be > 0. Decimal inputs that land on a midpoint round away from
/// zero even when the stored double sits a few ulps off the exact midpoint.
double quantize(double x, double unit);

} // namespace weberseg
