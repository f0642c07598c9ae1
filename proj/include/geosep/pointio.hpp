#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geosep/geom.hpp"

namespace geosep {

/// Number of fractional decimal digits kept when scaling input; 6 unless
/// GEOSEP_SCALE names another power of ten.
int scale_digits();

/// Parses a decimal with at most `digits` fractional digits into the scaled
/// integer. nullopt on malformed text, excess precision or range overflow.
std::optional<Coord> parse_decimal(std::string_view text, int digits);
std::string format_decimal(Coord value, int digits);

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line, const std::string& what);
};

/// Ids are the 1-based line numbers of the points.
std::vector<Point2> read_colored2(std::istream& in, int digits);
std::vector<Point3> read_colored3(std::istream& in, int digits);
std::vector<WeightedPoint2> read_weighted2(std::istream& in, int digits);

void write_points(std::ostream& out, std::span<const Point2> pts, int digits);
void write_points(std::ostream& out, std::span<const Point3> pts, int digits);
void write_points(std::ostream& out, std::span<const WeightedPoint2> pts, int digits);

}  // namespace geosep
