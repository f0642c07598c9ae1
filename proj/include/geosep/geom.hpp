#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>

namespace geosep {

/// Scaled integer coordinate. Inputs are decimals multiplied by the scale
/// factor (10^6 unless overridden) so that every predicate is exact.
using Coord = std::int64_t;

/// Frame-space value: dot/cross products of coordinate differences.
using Wide = __int128;

/// |Coord| must stay below this after scaling.
inline constexpr Coord kCoordLimit = Coord{1} << 40;

inline constexpr Coord kCoordNegInf = INT64_MIN;
inline constexpr Coord kCoordPosInf = INT64_MAX;

// Frame values are bounded by 2^84, so these never collide with real data.
inline constexpr Wide kWideNegInf = -(Wide{1} << 120);
inline constexpr Wide kWidePosInf = Wide{1} << 120;

enum class Color : std::uint8_t { Red, Blue };

inline constexpr Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline constexpr const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

struct Point2 {
    Coord x = 0;
    Coord y = 0;
    Color color = Color::Red;
    std::uint32_t id = 0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Red points carry positive weight, blue points negative; zero is rejected at parse.
struct WeightedPoint2 {
    Coord x = 0;
    Coord y = 0;
    std::int64_t weight = 0;
    std::uint32_t id = 0;

    bool red() const { return weight > 0; }
    friend bool operator==(const WeightedPoint2&, const WeightedPoint2&) = default;
};

struct Point3 {
    Coord x = 0;
    Coord y = 0;
    Coord z = 0;
    Color color = Color::Red;
    std::uint32_t id = 0;

    friend bool operator==(const Point3&, const Point3&) = default;
};

inline bool in_coord_range(Coord v) { return v > -kCoordLimit && v < kCoordLimit; }

struct FrameCoords {
    Wide u = 0;
    Wide v = 0;
    friend bool operator==(const FrameCoords&, const FrameCoords&) = default;
};

/// Coordinate frame whose x-axis is the directed line through p and q.
/// Coordinates are left unnormalized (scaled by |pq|^2) to stay integral.
struct Frame {
    Coord px = 0, py = 0;
    Coord qx = 0, qy = 0;
    std::uint32_t p_id = 0, q_id = 0;

    Coord dx() const { return qx - px; }
    Coord dy() const { return qy - py; }

    /// Returns nullopt when p and q coincide.
    template <class P>
    static std::optional<Frame> make(const P& p, const P& q) {
        if (p.x == q.x && p.y == q.y) return std::nullopt;
        assert(in_coord_range(p.x) && in_coord_range(p.y));
        assert(in_coord_range(q.x) && in_coord_range(q.y));
        return Frame{p.x, p.y, q.x, q.y, p.id, q.id};
    }

    /// u(q) = |pq|^2.
    Wide u_of_q() const { return Wide{dx()} * dx() + Wide{dy()} * dy(); }
};

/// u(r) = (r - p) . (dx, dy),  v(r) = (r - p) x (dx, dy).
inline FrameCoords frame_coords(Coord x, Coord y, const Frame& f) {
    const Wide rx = Wide{x} - f.px;
    const Wide ry = Wide{y} - f.py;
    const Wide dx = f.dx();
    const Wide dy = f.dy();
    return {rx * dx + ry * dy, rx * dy - ry * dx};
}

template <class P>
FrameCoords frame_coords(const P& r, const Frame& f) {
    return frame_coords(r.x, r.y, f);
}

/// Strict dominance in both coordinates.
inline bool dominates(const FrameCoords& a, const FrameCoords& b) { return a.u < b.u && a.v < b.v; }

std::string to_string(Wide v);

/// Renders sentinel values as "-inf"/"inf".
std::string ext_to_string(Wide v);
std::string ext_to_string(Coord v);

}  // namespace geosep
