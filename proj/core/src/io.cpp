#include "qrotor/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qrotor/errors.hpp"

namespace qrotor::io {

namespace {

class CsvError : public std::runtime_error {
public:
    CsvError(std::size_t line, const std::string& what)
        : std::runtime_error("csv line " + std::to_string(line) + ": " + what) {}
};

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

template <typename T>
T parse_field(std::string_view text, std::size_t line) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw CsvError(line, "cannot parse '" + std::string(text) + "'");
    }
    return value;
}

int read_header(std::istream& in, std::size_t& line_no) {
    std::string line;
    if (!std::getline(in, line)) throw CsvError(1, "missing header");
    ++line_no;
    const auto fields = split(line);
    if (fields.size() != 2 || fields[0] != "D") throw CsvError(line_no, "expected header D,<D>");
    return parse_field<int>(fields[1], line_no);
}

}  // namespace

std::string format_double(double value) {
    std::array<char, 64> buffer{};
    const auto [ptr, ec] =
        std::to_chars(buffer.data(), buffer.data() + buffer.size(), value, std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("failed to format double");
    return {buffer.data(), ptr};
}

void write_wigner_csv(std::ostream& out, const WignerGrid& grid) {
    out << "D," << grid.dim() << '\n';
    for (long s = 0; s < grid.side(); ++s) {
        for (long r = grid.r_min(); r <= grid.r_max(); ++r) {
            out << s << ',' << r << ',' << format_double(grid.at(s, r)) << '\n';
        }
    }
}

WignerGrid read_wigner_csv(std::istream& in) {
    std::size_t line_no = 0;
    const int d = read_header(in, line_no);
    if (d < 1 || d % 2 == 0) throw CsvError(line_no, "dimension must be odd");
    const long side = 2L * d;
    const long r_min = -(d - 1);
    std::vector<double> values(static_cast<std::size_t>(side * side));
    std::vector<bool> seen(values.size(), false);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split(line);
        if (fields.size() != 3) throw CsvError(line_no, "expected s,r,value");
        const long s = parse_field<long>(fields[0], line_no);
        const long r = parse_field<long>(fields[1], line_no);
        if (s < 0 || s >= side || r < r_min || r >= r_min + side) throw CsvError(line_no, "index out of range");
        const auto idx = static_cast<std::size_t>(s * side + (r - r_min));
        values[idx] = parse_field<double>(fields[2], line_no);
        seen[idx] = true;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
        throw CsvError(line_no, "grid is incomplete");
    }
    return WignerGrid(d, std::move(values));
}

void write_representative_csv(std::ostream& out, const RepresentativeGrid& grid) {
    out << "D," << grid.dim() << '\n';
    for (long a = 0; a < grid.dim(); ++a) {
        for (long b = 0; b < grid.dim(); ++b) out << a << ',' << b << ',' << format_double(grid.at(a, b)) << '\n';
    }
}

RepresentativeGrid read_representative_csv(std::istream& in) {
    std::size_t line_no = 0;
    const int d = read_header(in, line_no);
    if (d < 1 || d % 2 == 0) throw CsvError(line_no, "dimension must be odd");
    std::vector<double> values(static_cast<std::size_t>(d) * d);
    std::vector<bool> seen(values.size(), false);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split(line);
        if (fields.size() != 3) throw CsvError(line_no, "expected a,b,value");
        const long a = parse_field<long>(fields[0], line_no);
        const long b = parse_field<long>(fields[1], line_no);
        if (a < 0 || a >= d || b < 0 || b >= d) throw CsvError(line_no, "index out of range");
        const auto idx = static_cast<std::size_t>(a * d + b);
        values[idx] = parse_field<double>(fields[2], line_no);
        seen[idx] = true;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
        throw CsvError(line_no, "grid is incomplete");
    }
    return RepresentativeGrid(d, std::move(values));
}

void write_marginals_csv(std::ostream& out, const WignerGrid& grid) {
    out << "D," << grid.dim() << '\n';
    out << "axis,index,probability\n";
    for (long r = grid.r_min(); r <= grid.r_max(); ++r) {
        out << "momentum," << r << ',' << format_double(marginal_momentum(grid, r)) << '\n';
    }
    for (long s = 0; s < grid.side(); ++s) {
        out << "angle," << s << ',' << format_double(marginal_angle(grid, s)) << '\n';
    }
}

void write_revival_csv(std::ostream& out, const RevivalScan& scan) {
    out << "j,autocorrelation\n";
    for (const auto& sample : scan.samples) out << sample.step << ',' << format_double(sample.autocorrelation) << '\n';
}

void write_state_csv(std::ostream& out, const RotorState& state) {
    out << "D," << state.dim() << '\n';
    out << "m,re,im\n";
    for (int m = -state.cutoff(); m <= state.cutoff(); ++m) {
        const auto c = state.amplitude(m);
        out << m << ',' << format_double(c.real()) << ',' << format_double(c.imag()) << '\n';
    }
}

std::string admissibility_json(const AdmissibilityReport& report) {
    const nlohmann::ordered_json doc = {
        {"alpha", report.alpha.str()},
        {"alpha_num", report.alpha.num()},
        {"alpha_den", report.alpha.den()},
        {"full_grid_ok_at_base", report.full_grid_ok_at_base},
        {"representative_ok_at_base", report.representative_ok_at_base},
        {"minimal_dilation", report.minimal_dilation},
        {"paper_dilation", report.paper_dilation},
        {"winding_number", report.winding_number},
    };
    return doc.dump(2);
}

void write_graymap(std::ostream& image, std::ostream& sidecar, const WignerGrid& grid) {
    const auto values = grid.values();
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double offset = *lo;
    const double scale = *hi > *lo ? 65535.0 / (*hi - *lo) : 0.0;

    image << "P2\n" << grid.side() << ' ' << grid.side() << "\n65535\n";
    for (long r = grid.r_max(); r >= grid.r_min(); --r) {
        for (long s = 0; s < grid.side(); ++s) {
            const auto pixel = std::lround((grid.at(s, r) - offset) * scale);
            image << std::clamp<long>(pixel, 0, 65535) << (s + 1 == grid.side() ? '\n' : ' ');
        }
    }
    sidecar << "offset=" << format_double(offset) << '\n';
    sidecar << "scale=" << format_double(scale) << '\n';
    sidecar << "value = offset + pixel / scale\n";
}

}  // namespace qrotor::io
