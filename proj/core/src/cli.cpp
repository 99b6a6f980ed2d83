#include "weberseg/cli.hpp"

#include "weberseg/enumeration.hpp"
#include "weberseg/report.hpp"
#include "weberseg/series_io.hpp"
#include "weberseg/split.hpp"
#include "weberseg/weber.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

namespace weberseg {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

SeriesSource parse_format(const std::string& format, const std::string& input) {
    SeriesSource source;
    source.path = input;
    if (format == "plain") {
        source.kind = SourceKind::plain;
        return source;
    }
    const auto colon = format.find(':');
    const std::string head = format.substr(0, colon);
    if (colon == std::string::npos || colon + 1 == format.size() ||
        (head != "csv" && head != "pgm")) {
        throw CLI::ValidationError("--format",
                                   "expected plain, csv:<col> or pgm:<row>, got \"" + format +
                                       "\"");
    }
    const std::string tail = format.substr(colon + 1);
    std::size_t index = 0;
    try {
        std::size_t used = 0;
        index = std::stoul(tail, &used);
        if (used != tail.size()) {
            throw std::invalid_argument(tail);
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--format", "bad index \"" + tail + "\" in \"" + format + "\"");
    }
    source.kind = head == "csv" ? SourceKind::csv : SourceKind::pgm_row;
    source.index = index;
    return source;
}

std::string format_two_decimals(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    return buf;
}

int run_iir(double k, bool table, std::ostream& out) {
    if (table) {
        out << "K\tIIR\n";
        for (const auto& [kk, iir] : iir_table(typical_ks())) {
            out << format_double(kk) << '\t' << format_two_decimals(iir) << '\n';
        }
    } else {
        out << format_double(iir_formula(k)) << '\n';
    }
    return kExitOk;
}

int run_split(const SplitConfig& config, const SeriesSource& source, const std::string& output,
              std::istream& in, std::ostream& out) {
    const std::vector<double> series = parse_series(source, in);
    const Segmentation segmentation = split(series, config);
    const SplitReport report = make_report(segmentation, config);
    if (output == "json") {
        out << to_json(report) << '\n';
    } else {
        print_text(out, report);
    }
    return kExitOk;
}

int run_cornsweet(std::size_t pad, std::size_t height, const std::string& emit,
                  std::ostream& out) {
    if (emit == "pgm") {
        write_pgm(out, cornsweet_image(pad, height), /*binary=*/false);
    } else {
        const auto profile = cornsweet_profile(pad, pad);
        for (std::size_t i = 0; i < profile.size(); ++i) {
            out << format_double(profile[i]) << (i + 1 < profile.size() ? ' ' : '\n');
        }
    }
    return kExitOk;
}

DigitSequence sequence_from_string(const std::string& text) {
    DigitSequence seq;
    seq.digits.reserve(text.size());
    for (char c : text) {
        seq.digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return seq;
}

int run_diagonal(std::uint64_t digits, std::uint64_t nth, const std::string& find,
                 std::uint64_t limit, std::ostream& out) {
    if (digits > 0) {
        const DigitSequence seq = diagonal(static_cast<std::size_t>(digits));
        for (std::uint8_t d : seq.digits) {
            out << static_cast<char>('0' + d);
        }
        out << '\n';
    } else if (nth > 0) {
        out << "0." << nth_decimal(nth).digits << '\n';
    } else {
        const auto hit = find_in_enumeration(sequence_from_string(find), limit);
        if (hit) {
            out << *hit << '\n';
        } else {
            out << "absent\n";
        }
    }
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Weber-law series segmentation and decimal enumeration tools", "weberseg"};
    app.require_subcommand(1);

    // iir
    auto* iir_cmd = app.add_subcommand("iir", "Print the IIR threshold for one K, or the table");
    double iir_k = 0.0;
    bool iir_table_flag = false;
    auto* iir_k_opt = iir_cmd->add_option("--k", iir_k, "Weber constant K in [0, 1]")
                          ->check(CLI::Range(0.0, 1.0));
    auto* iir_table_opt =
        iir_cmd->add_flag("--table", iir_table_flag, "Print the typical (K, IIR) rows");
    iir_k_opt->excludes(iir_table_opt);

    // split
    auto* split_cmd = app.add_subcommand("split", "Segment a numeric series");
    std::string mode_name;
    split_cmd->add_option("--mode", mode_name, "sorted or sequence")
        ->required()
        ->check(CLI::IsMember({"sorted", "sequence"}));
    double split_k = 0.0;
    const CLI::Validator half_open_unit(
        [](std::string& s) -> std::string {
            double v = 0.0;
            try {
                v = std::stod(s);
            } catch (const std::exception&) {
                return "not a number: " + s;
            }
            if (!(v >= 0.0) || v >= 1.0) {
                return "K must lie in [0, 1), got " + s;
            }
            return {};
        },
        "K in [0,1)");
    split_cmd->add_option("--k", split_k, "Weber constant K in [0, 1)")
        ->required()
        ->check(half_open_unit);
    bool recursive = false;
    split_cmd->add_flag("--recursive", recursive, "Re-score inside segments until stable");
    double unit = 0.0;
    auto* unit_opt = split_cmd->add_option("--unit", unit, "Quantization unit, > 0")
                         ->check(CLI::PositiveNumber);
    std::size_t min_segment = 1;
    split_cmd->add_option("--min-segment", min_segment, "Merge segments shorter than this")
        ->check(CLI::PositiveNumber);
    std::string input;
    split_cmd->add_option("--input", input, "Input path, or - for standard input")->required();
    std::string format = "plain";
    split_cmd->add_option("--format", format, "plain, csv:<col> or pgm:<row>");
    std::string output = "text";
    split_cmd->add_option("--output", output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // cornsweet
    auto* corn_cmd = app.add_subcommand("cornsweet", "Emit the edge-illusion brightness profile");
    std::size_t pad = 0;
    corn_cmd->add_option("--pad", pad, "Plateau pixels added on each side");
    std::size_t height = 1;
    corn_cmd->add_option("--height", height, "Image height for --emit pgm")
        ->check(CLI::PositiveNumber);
    std::string emit = "values";
    corn_cmd->add_option("--emit", emit, "values or pgm")->check(CLI::IsMember({"values", "pgm"}));

    // diagonal
    auto* diag_cmd = app.add_subcommand("diagonal", "Query the decimal enumeration");
    std::uint64_t diag_digits = 0;
    auto* digits_opt = diag_cmd->add_option("--digits", diag_digits, "Diagonal prefix length")
                           ->check(CLI::PositiveNumber);
    std::uint64_t diag_nth = 0;
    auto* nth_opt = diag_cmd->add_option("--nth", diag_nth, "Print the nth enumerated decimal")
                        ->check(CLI::PositiveNumber);
    std::string find_digits;
    auto* find_opt = diag_cmd->add_option("--find", find_digits,
                                          "Digit sequence to locate in the enumeration");
    std::uint64_t limit = 100000;
    diag_cmd->add_option("--limit", limit, "Scan bound for --find")->check(CLI::PositiveNumber);
    digits_opt->excludes(nth_opt)->excludes(find_opt);
    nth_opt->excludes(find_opt);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (iir_cmd->parsed()) {
            if (!iir_table_flag && iir_k_opt->count() == 0) {
                err << "iir: one of --k or --table is required\n";
                return kExitUsage;
            }
            return run_iir(iir_k, iir_table_flag, out);
        }
        if (split_cmd->parsed()) {
            SplitConfig config;
            config.mode = mode_name == "sorted" ? SplitMode::sorted : SplitMode::sequence;
            config.k = split_k;
            config.recursive = recursive;
            if (unit_opt->count() > 0) {
                config.unit = unit;
            }
            config.min_segment = min_segment;
            return run_split(config, parse_format(format, input), output, in, out);
        }
        if (corn_cmd->parsed()) {
            return run_cornsweet(pad, height, emit, out);
        }
        if (diag_cmd->parsed()) {
            if (digits_opt->count() + nth_opt->count() + find_opt->count() != 1) {
                err << "diagonal: exactly one of --digits, --nth or --find is required\n";
                return kExitUsage;
            }
            if (find_opt->count() > 0 &&
                (find_digits.empty() ||
                 !std::all_of(find_digits.begin(), find_digits.end(),
                              [](char c) { return c >= '0' && c <= '9'; }))) {
                err << "diagonal: --find expects a non-empty digit string, got \"" << find_digits
                    << "\"\n";
                return kExitUsage;
            }
            return run_diagonal(diag_digits, diag_nth, find_digits, limit, out);
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}

} // namespace weberseg
