#include "geosep/pointio.hpp"

#include <cstdlib>
#include <istream>
#include <ostream>

namespace geosep {

namespace {

constexpr int kDefaultDigits = 6;
constexpr int kMaxDigits = 9;

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

// Calls fn(line_number, fields) for every non-blank, non-comment line.
template <class Fn>
void for_each_record(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view view(line);
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        const auto fields = split_fields(view);
        if (fields.empty()) continue;
        fn(number, fields);
    }
}

Coord coordinate(std::size_t line, std::string_view text, int digits) {
    const auto v = parse_decimal(text, digits);
    if (!v) throw ParseError(line, "bad coordinate '" + std::string(text) + "'");
    return *v;
}

Color color_of(std::size_t line, std::string_view text) {
    if (text == "R" || text == "r") return Color::Red;
    if (text == "B" || text == "b") return Color::Blue;
    throw ParseError(line, "bad color '" + std::string(text) + "' (expected R or B)");
}

void expect_fields(std::size_t line, std::size_t got, std::size_t want) {
    if (got != want)
        throw ParseError(line, "expected " + std::to_string(want) + " fields, found " + std::to_string(got));
}

}  // namespace

int scale_digits() {
    const char* env = std::getenv("GEOSEP_SCALE");
    if (!env || !*env) return kDefaultDigits;
    std::string_view s(env);
    // Accept 10^k written out (1, 10, 1000000, ...).
    if (s.front() != '1') throw std::invalid_argument("GEOSEP_SCALE must be a power of ten");
    for (char c : s.substr(1))
        if (c != '0') throw std::invalid_argument("GEOSEP_SCALE must be a power of ten");
    const int digits = static_cast<int>(s.size()) - 1;
    if (digits > kMaxDigits) throw std::invalid_argument("GEOSEP_SCALE above 10^9 is not supported");
    return digits;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}

std::optional<Coord> parse_decimal(std::string_view text, int digits) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    Wide value = 0;
    std::size_t int_digits = 0;
    for (; i < text.size() && is_digit(text[i]); ++i, ++int_digits) {
        value = value * 10 + (text[i] - '0');
        if (value >= (Wide{1} << 80)) return std::nullopt;
    }
    int frac = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        for (; i < text.size() && is_digit(text[i]); ++i) {
            if (++frac > digits) return std::nullopt;
            value = value * 10 + (text[i] - '0');
        }
    }
    if (i != text.size() || (int_digits == 0 && frac == 0)) return std::nullopt;
    for (; frac < digits; ++frac) value *= 10;
    if (negative) value = -value;
    if (value <= -kCoordLimit || value >= kCoordLimit) return std::nullopt;
    return static_cast<Coord>(value);
}

std::string format_decimal(Coord value, int digits) {
    std::string out;
    std::string mag = std::to_string(value < 0 ? -value : value);
    if (digits > 0) {
        if (mag.size() <= static_cast<std::size_t>(digits)) mag.insert(0, digits + 1 - mag.size(), '0');
        std::string frac = mag.substr(mag.size() - digits);
        mag.resize(mag.size() - digits);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) mag += "." + frac;
    }
    if (value < 0) out.push_back('-');
    return out + mag;
}

std::vector<Point2> read_colored2(std::istream& in, int digits) {
    std::vector<Point2> out;
    for_each_record(in, [&](std::size_t line, const auto& f) {
        expect_fields(line, f.size(), 3);
        out.push_back({coordinate(line, f[0], digits), coordinate(line, f[1], digits), color_of(line, f[2]),
                       static_cast<std::uint32_t>(line)});
    });
    return out;
}

std::vector<Point3> read_colored3(std::istream& in, int digits) {
    std::vector<Point3> out;
    for_each_record(in, [&](std::size_t line, const auto& f) {
        expect_fields(line, f.size(), 4);
        out.push_back({coordinate(line, f[0], digits), coordinate(line, f[1], digits), coordinate(line, f[2], digits),
                       color_of(line, f[3]), static_cast<std::uint32_t>(line)});
    });
    return out;
}

std::vector<WeightedPoint2> read_weighted2(std::istream& in, int digits) {
    std::vector<WeightedPoint2> out;
    for_each_record(in, [&](std::size_t line, const auto& f) {
        expect_fields(line, f.size(), 3);
        const Coord w = coordinate(line, f[2], digits);
        if (w == 0) throw ParseError(line, "weight must be nonzero");
        out.push_back({coordinate(line, f[0], digits), coordinate(line, f[1], digits), w,
                       static_cast<std::uint32_t>(line)});
    });
    return out;
}

void write_points(std::ostream& out, std::span<const Point2> pts, int digits) {
    for (const Point2& p : pts)
        out << format_decimal(p.x, digits) << ' ' << format_decimal(p.y, digits) << ' '
            << (p.color == Color::Red ? 'R' : 'B') << '\n';
}

void write_points(std::ostream& out, std::span<const Point3> pts, int digits) {
    for (const Point3& p : pts)
        out << format_decimal(p.x, digits) << ' ' << format_decimal(p.y, digits) << ' ' << format_decimal(p.z, digits)
            << ' ' << (p.color == Color::Red ? 'R' : 'B') << '\n';
}

void write_points(std::ostream& out, std::span<const WeightedPoint2> pts, int digits) {
    for (const WeightedPoint2& p : pts)
        out << format_decimal(p.x, digits) << ' ' << format_decimal(p.y, digits) << ' '
            << format_decimal(p.weight, digits) << '\n';
}

}  // namespace geosep
