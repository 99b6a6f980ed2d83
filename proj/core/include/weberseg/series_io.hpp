#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace weberseg {

// Raised for unreadable or malformed input data. The message names the
// offending location (line/offset, column, row) when one exists.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SourceKind {
    plain,   // whitespace-separated decimals
    csv,     // comma-separated records, one column selected
    pgm_row, // P2/P5 grayscale image, one row selected
};

struct SeriesSource {
    SourceKind kind = SourceKind::plain;
    std::string path = "-"; // "-" reads the provided standard-input stream
    std::size_t index = 0;  // csv column or pgm row, 0-based
};

std::vector<double> parse_plain(std::istream& in);

// RFC-4180-style records: quoted fields may contain commas, doubled quotes
// and newlines. A leading header row is skipped when its selected cell is
// not numeric; any later non-numeric cell is an error.
std::vector<double> parse_csv_column(std::istream& in, std::size_t column);

std::vector<double> parse_pgm_row(std::istream& in, std::size_t row);

/// Dispatch on source.kind; source.path == "-" reads stdin_stream.
std::vector<double> parse_series(const SeriesSource& source, std::istream& stdin_stream);

struct PgmImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::uint16_t maxval = 255;
    std::vector<std::uint16_t> pixels; // row-major

    std::uint16_t at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }
};

/// Reads P2 (ASCII) and P5 (binary) images with maxval <= 65535.
PgmImage read_pgm(std::istream& in);

/// Writes P2 when binary is false, P5 otherwise.
void write_pgm(std::ostream& out, const PgmImage& image, bool binary);

/// The 13-pixel brightness profile of the two-plateau edge illusion,
/// padded with copies of the plateau value 173 on either side.
std::vector<double> cornsweet_profile(std::size_t left_pad, std::size_t right_pad);

/// Grayscale image (maxval 255) whose every row is
/// cornsweet_profile(width_pad, width_pad).
PgmImage cornsweet_image(std::size_t width_pad, std::size_t height);

} // namespace weberseg
