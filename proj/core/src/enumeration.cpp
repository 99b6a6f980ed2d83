#include "weberseg/enumeration.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace weberseg {

namespace {

// Digit strings longer than this overflow 64-bit positions.
constexpr std::size_t kMaxLength = 18;

std::uint64_t pow10(std::size_t e) {
    std::uint64_t p = 1;
    while (e-- > 0) {
        p *= 10;
    }
    return p;
}

} // namespace

EnumeratedDecimal nth_decimal(std::uint64_t n) {
    if (n < 1) {
        throw std::invalid_argument("nth_decimal: n must be >= 1");
    }
    std::uint64_t remaining = n;
    std::size_t length = 1;
    std::uint64_t group = 9; // count of length-L entries: 9 * 10^(L-1)
    while (remaining > group) {
        remaining -= group;
        ++length;
        if (length > kMaxLength) {
            throw std::out_of_range("nth_decimal: n exceeds the supported range");
        }
        group *= 10;
    }
    // Entries of length L, ordered by value, are the integers m in
    // [1, 10^L - 1] with m % 10 != 0, left-padded with zeros. The rth such
    // integer is m = 10 * ((r-1) / 9) + ((r-1) % 9) + 1.
    const std::uint64_t r = remaining;
    const std::uint64_t m = 10 * ((r - 1) / 9) + (r - 1) % 9 + 1;

    std::string digits = std::to_string(m);
    digits.insert(0, length - digits.size(), '0');
    return {std::move(digits), n};
}

std::uint64_t index_of(const std::string& digits) {
    if (digits.empty()) {
        throw std::invalid_argument("index_of: empty digit string");
    }
    if (digits.size() > kMaxLength) {
        throw std::out_of_range("index_of: digit string longer than " +
                                std::to_string(kMaxLength) + " is not supported");
    }
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument(std::string("index_of: non-digit character '") + c + "'");
        }
    }
    if (digits.back() == '0') {
        throw std::invalid_argument("index_of: trailing zero is not canonical");
    }
    std::uint64_t m = 0;
    for (char c : digits) {
        m = m * 10 + static_cast<std::uint64_t>(c - '0');
    }
    const std::uint64_t shorter = pow10(digits.size() - 1) - 1; // entries of smaller length
    return shorter + m - m / 10;
}

DigitSequence diagonal(std::size_t prefix_len) {
    if (prefix_len < 1) {
        throw std::invalid_argument("diagonal: prefix length must be >= 1");
    }
    DigitSequence seq;
    seq.digits.reserve(prefix_len);
    for (std::size_t i = 1; i <= prefix_len; ++i) {
        const EnumeratedDecimal dec = nth_decimal(i);
        const std::uint8_t digit =
            i <= dec.length() ? static_cast<std::uint8_t>(dec.digits[i - 1] - '0') : 0;
        seq.digits.push_back(digit);
    }
    return seq;
}

DigitSequence invert(const DigitSequence& seq) {
    DigitSequence out;
    out.digits.reserve(seq.digits.size());
    for (std::uint8_t d : seq.digits) {
        out.digits.push_back(d == 1 ? 0 : 1);
    }
    return out;
}

std::optional<std::uint64_t> find_in_enumeration(const DigitSequence& seq, std::uint64_t limit) {
    if (limit < 1) {
        throw std::invalid_argument("find_in_enumeration: limit must be >= 1");
    }
    for (std::uint64_t n = 1; n <= limit; ++n) {
        const EnumeratedDecimal dec = nth_decimal(n);
        const std::size_t span = std::max(dec.length(), seq.length());
        bool match = true;
        for (std::size_t pos = 1; pos <= span; ++pos) {
            const std::uint8_t have =
                pos <= dec.length() ? static_cast<std::uint8_t>(dec.digits[pos - 1] - '0') : 0;
            const std::uint8_t want = pos <= seq.length() ? seq.digits[pos - 1] : 0;
            if (have != want) {
                match = false;
                break;
            }
        }
        if (match) {
            return n;
        }
    }
    return std::nullopt;
}

} // namespace weberseg
