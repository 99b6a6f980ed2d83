#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testutil {

inline bool close_rel(double a, double b, double rel) {
    if (a == b) {
        return true;
    }
    return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b));
}

// Brute-force splitter: evaluates the three published ratios per gap with no
// reduction shortcut and no shared code with the library path. Returns the
// 1-based gap indices that reach the threshold.
inline std::vector<std::size_t> oracle_boundaries(std::vector<double> values, bool sorted,
                                                  double k) {
    if (sorted) {
        std::sort(values.begin(), values.end());
    }
    std::vector<std::size_t> fired;
    if (values.size() < 2) {
        return fired;
    }
    std::vector<double> gaps;
    for (std::size_t i = 1; i < values.size(); ++i) {
        gaps.push_back(std::fabs(values[i] - values[i - 1]));
    }
    double mean = 0.0;
    for (double g : gaps) {
        mean += g;
    }
    mean /= static_cast<double>(gaps.size());
    if (!(mean > 0.0)) {
        return fired;
    }
    const double iir = 2.0 * (1.0 - k) / (1.0 + k);
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        const double former = i == 0 ? 0.0 : gaps[i - 1];
        if (!(gaps[i] > former)) {
            continue; // inhibitory rate undefined, nothing to test
        }
        const double er = gaps[i] / mean;
        const double ihr = gaps[i] / (gaps[i] - former);
        if (er / ihr >= iir) {
            fired.push_back(i + 1);
        }
    }
    return fired;
}

// Generative enumeration: lists canonical digit strings shortest-first, in
// numeric order within a length, by walking the integers and skipping those
// ending in zero. Independent of the closed-form path.
class EnumerationOracle {
public:
    std::string next() {
        do {
            ++m_;
            if (m_ >= bound_) {
                m_ = 1;
                bound_ *= 10;
                ++length_;
            }
        } while (m_ % 10 == 0);
        std::string s = std::to_string(m_);
        return std::string(length_ - s.size(), '0') + s;
    }

private:
    std::uint64_t m_ = 0;
    std::uint64_t bound_ = 10;
    std::size_t length_ = 1;
};

inline std::vector<double> random_series(std::mt19937_64& rng, std::size_t min_len,
                                         std::size_t max_len, double lo, double hi) {
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::uniform_real_distribution<double> val_dist(lo, hi);
    std::vector<double> series(len_dist(rng));
    for (double& v : series) {
        v = val_dist(rng);
    }
    return series;
}

} // namespace testutil
