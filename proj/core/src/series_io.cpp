#include "weberseg/series_io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace weberseg {

namespace {

constexpr double kPlateau = 173.0;
constexpr std::array<double, 13> kEdgeProfile = {173, 172, 171, 170, 169, 168, 167,
                                                 178, 177, 176, 175, 174, 173};

bool parse_number(std::string_view token, double& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

double parse_finite(std::string_view token, const std::string& where) {
    double value = 0.0;
    if (!parse_number(token, value)) {
        throw parse_error(where + ": unparsable token \"" + std::string(token) + "\"");
    }
    if (!std::isfinite(value)) {
        throw parse_error(where + ": non-finite value \"" + std::string(token) + "\"");
    }
    return value;
}

// One CSV record; handles quoted fields with embedded commas, doubled
// quotes and newlines. Returns false at end of input.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields, std::size_t& line_no) {
    fields.clear();
    int c = in.get();
    if (c == std::char_traits<char>::eof()) {
        return false;
    }
    std::string field;
    bool quoted = false;
    bool any = false;
    while (true) {
        if (c == std::char_traits<char>::eof()) {
            break;
        }
        const char ch = static_cast<char>(c);
        if (quoted) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                if (ch == '\n') {
                    ++line_no;
                }
                field.push_back(ch);
            }
        } else if (ch == '"' && field.empty()) {
            quoted = true;
            any = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
            any = true;
        } else if (ch == '\n') {
            break;
        } else if (ch != '\r') {
            field.push_back(ch);
            any = true;
        }
        c = in.get();
    }
    fields.push_back(std::move(field));
    if (!any && fields.size() == 1 && fields[0].empty()) {
        // blank line; skip it unless it terminates the input
        return read_csv_record(in, fields, ++line_no);
    }
    return true;
}

// Skips whitespace and '#' comments, then reads one unsigned header token.
std::uint64_t read_pgm_header_value(std::istream& in, const char* what) {
    int c = in.get();
    while (c != std::char_traits<char>::eof()) {
        if (c == '#') {
            while (c != std::char_traits<char>::eof() && c != '\n') {
                c = in.get();
            }
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == std::char_traits<char>::eof() || !std::isdigit(c)) {
        throw parse_error(std::string("malformed PGM header: missing ") + what);
    }
    std::uint64_t value = 0;
    while (c != std::char_traits<char>::eof() && std::isdigit(c)) {
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > 1000000000ULL) {
            throw parse_error(std::string("malformed PGM header: ") + what + " out of range");
        }
        c = in.get();
    }
    if (c != std::char_traits<char>::eof()) {
        in.unget();
    }
    return value;
}

} // namespace

std::vector<double> parse_plain(std::istream& in) {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) {
                ++pos;
            }
            if (pos >= line.size()) {
                break;
            }
            std::size_t end = pos;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) {
                ++end;
            }
            const std::string where =
                "line " + std::to_string(line_no) + ", offset " + std::to_string(pos);
            values.push_back(parse_finite(std::string_view(line).substr(pos, end - pos), where));
            pos = end;
        }
    }
    return values;
}

std::vector<double> parse_csv_column(std::istream& in, std::size_t column) {
    std::vector<double> values;
    std::vector<std::string> fields;
    std::size_t line_no = 1;
    bool first_record = true;
    while (read_csv_record(in, fields, line_no)) {
        const std::size_t record_line = line_no;
        ++line_no;
        if (column >= fields.size()) {
            throw parse_error("line " + std::to_string(record_line) + ": missing column " +
                              std::to_string(column) + " (record has " +
                              std::to_string(fields.size()) + " fields)");
        }
        double value = 0.0;
        if (!parse_number(fields[column], value)) {
            if (first_record) {
                first_record = false; // header row
                continue;
            }
            throw parse_error("line " + std::to_string(record_line) + ": unparsable cell \"" +
                              fields[column] + "\" in column " + std::to_string(column));
        }
        if (!std::isfinite(value)) {
            throw parse_error("line " + std::to_string(record_line) + ": non-finite value \"" +
                              fields[column] + "\"");
        }
        first_record = false;
        values.push_back(value);
    }
    return values;
}

PgmImage read_pgm(std::istream& in) {
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5')) {
        throw parse_error("malformed PGM header: expected magic P2 or P5");
    }
    const bool binary = magic[1] == '5';

    PgmImage image;
    image.width = read_pgm_header_value(in, "width");
    image.height = read_pgm_header_value(in, "height");
    const std::uint64_t maxval = read_pgm_header_value(in, "maxval");
    if (image.width == 0 || image.height == 0) {
        throw parse_error("malformed PGM header: zero width or height");
    }
    if (maxval == 0 || maxval > 65535) {
        throw parse_error("malformed PGM header: maxval must lie in [1, 65535], got " +
                          std::to_string(maxval));
    }
    image.maxval = static_cast<std::uint16_t>(maxval);

    const std::size_t count = image.width * image.height;
    image.pixels.reserve(count);
    if (binary) {
        // exactly one whitespace byte separates the header from the samples
        const int sep = in.get();
        if (sep == std::char_traits<char>::eof() || !std::isspace(sep)) {
            throw parse_error("malformed PGM header: missing separator before pixel data");
        }
        const bool wide = maxval > 255;
        for (std::size_t i = 0; i < count; ++i) {
            int hi = in.get();
            int lo = wide ? in.get() : 0;
            if (hi == std::char_traits<char>::eof() ||
                (wide && lo == std::char_traits<char>::eof())) {
                throw parse_error("unexpected end of PGM pixel data at sample " +
                                  std::to_string(i));
            }
            const std::uint32_t sample = wide
                                             ? (static_cast<std::uint32_t>(hi) << 8 |
                                                static_cast<std::uint32_t>(lo))
                                             : static_cast<std::uint32_t>(hi);
            if (sample > maxval) {
                throw parse_error("PGM sample " + std::to_string(i) + " exceeds maxval");
            }
            image.pixels.push_back(static_cast<std::uint16_t>(sample));
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const std::uint64_t sample = read_pgm_header_value(in, "pixel sample");
            if (sample > maxval) {
                throw parse_error("PGM sample " + std::to_string(i) + " exceeds maxval");
            }
            image.pixels.push_back(static_cast<std::uint16_t>(sample));
        }
    }
    return image;
}

void write_pgm(std::ostream& out, const PgmImage& image, bool binary) {
    out << (binary ? "P5" : "P2") << '\n'
        << image.width << ' ' << image.height << '\n'
        << image.maxval << '\n';
    if (binary) {
        const bool wide = image.maxval > 255;
        for (std::uint16_t sample : image.pixels) {
            if (wide) {
                out.put(static_cast<char>(sample >> 8));
            }
            out.put(static_cast<char>(sample & 0xff));
        }
    } else {
        for (std::size_t y = 0; y < image.height; ++y) {
            for (std::size_t x = 0; x < image.width; ++x) {
                out << image.at(x, y) << (x + 1 < image.width ? ' ' : '\n');
            }
        }
    }
}

std::vector<double> parse_pgm_row(std::istream& in, std::size_t row) {
    const PgmImage image = read_pgm(in);
    if (row >= image.height) {
        throw parse_error("PGM row " + std::to_string(row) + " out of range (height " +
                          std::to_string(image.height) + ")");
    }
    std::vector<double> values;
    values.reserve(image.width);
    for (std::size_t x = 0; x < image.width; ++x) {
        values.push_back(static_cast<double>(image.at(x, row)));
    }
    return values;
}

std::vector<double> parse_series(const SeriesSource& source, std::istream& stdin_stream) {
    std::ifstream file;
    std::istream* in = &stdin_stream;
    if (source.path != "-") {
        const auto mode = source.kind == SourceKind::pgm_row
                              ? std::ios::in | std::ios::binary
                              : std::ios::in;
        file.open(source.path, mode);
        if (!file) {
            throw parse_error("cannot open \"" + source.path + "\"");
        }
        in = &file;
    }
    std::vector<double> values;
    switch (source.kind) {
    case SourceKind::plain:
        values = parse_plain(*in);
        break;
    case SourceKind::csv:
        values = parse_csv_column(*in, source.index);
        break;
    case SourceKind::pgm_row:
        values = parse_pgm_row(*in, source.index);
        break;
    }
    if (values.empty()) {
        throw parse_error("input contains no values");
    }
    return values;
}

std::vector<double> cornsweet_profile(std::size_t left_pad, std::size_t right_pad) {
    std::vector<double> profile;
    profile.reserve(left_pad + kEdgeProfile.size() + right_pad);
    profile.insert(profile.end(), left_pad, kPlateau);
    profile.insert(profile.end(), kEdgeProfile.begin(), kEdgeProfile.end());
    profile.insert(profile.end(), right_pad, kPlateau);
    return profile;
}

PgmImage cornsweet_image(std::size_t width_pad, std::size_t height) {
    if (height < 1) {
        throw std::invalid_argument("cornsweet_image: height must be >= 1");
    }
    const std::vector<double> row = cornsweet_profile(width_pad, width_pad);
    PgmImage image;
    image.width = row.size();
    image.height = height;
    image.maxval = 255;
    image.pixels.reserve(image.width * image.height);
    for (std::size_t y = 0; y < height; ++y) {
        for (double v : row) {
            image.pixels.push_back(static_cast<std::uint16_t>(v));
        }
    }
    return image;
}

} // namespace weberseg
