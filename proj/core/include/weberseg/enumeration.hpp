#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weberseg {

// The terminating decimals of (0, 1) listed by length of digits, then by
// numeric value: 0.1, 0.2, ..., 0.9, 0.01, 0.02, ..., 0.09, 0.11, ..., 0.99,
// 0.001, ... Every entry is kept as an exact digit string; no floating point
// is involved anywhere in this module.

// One enumerated decimal 0.d1...dL. The last digit is never zero (canonical
// terminating form); leading zeros are significant.
struct EnumeratedDecimal {
    std::string digits;
    std::uint64_t index = 0; // 1-based enumeration position

    std::size_t length() const noexcept { return digits.size(); }
    bool operator==(const EnumeratedDecimal&) const = default;
};

// A finite prefix of a digit sequence, 1-based positions, digits 0-9.
struct DigitSequence {
    std::vector<std::uint8_t> digits;

    std::size_t length() const noexcept { return digits.size(); }
    bool operator==(const DigitSequence&) const = default;
};

/// The nth enumerated decimal, n >= 1. Supported up to n < 10^18.
EnumeratedDecimal nth_decimal(std::uint64_t n);

/// Enumeration index of a canonical digit string (non-empty, digits only,
/// last digit nonzero). Exact inverse of nth_decimal.
std::uint64_t index_of(const std::string& digits);

/// Digit i of the ith enumerated decimal for i = 1..prefix_len, with digits
/// past a number's length read as 0.
DigitSequence diagonal(std::size_t prefix_len);

/// Digit-wise inversion: 1 -> 0, any other digit -> 1.
DigitSequence invert(const DigitSequence& seq);

/// First n <= limit whose decimal, zero-extended, agrees with seq on all of
/// seq's positions and is zero beyond them; empty when no such n exists.
std::optional<std::uint64_t> find_in_enumeration(const DigitSequence& seq, std::uint64_t limit);

} // namespace weberseg
