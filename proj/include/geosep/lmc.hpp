#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>

#include "geosep/geom.hpp"
#include "geosep/lmr.hpp"

namespace geosep {

/// Closed axis-parallel box; sentinel coordinates mean unbounded.
struct AxisCuboid {
    std::array<Coord, 3> lo{kCoordNegInf, kCoordNegInf, kCoordNegInf};
    std::array<Coord, 3> hi{kCoordPosInf, kCoordPosInf, kCoordPosInf};
    std::size_t size = 0;
    Color color = Color::Red;

    bool contains_closed(const Point3& p) const;
    bool contains_open(const Point3& p) const;
};

/// Which faces the cuboid search is allowed to use.
enum class CuboidType : int {
    Slab = 1,        // top and bottom are box faces
    BottomOnly = 2,  // bottom face through an obstacle, top open
    TopAnchored = 3, // top face through an obstacle, bottom anything
};

struct LmcOptions {
    /// Re-verify staircase invariants after every update (test builds).
    bool check_stairs = false;
};

/// Best `target`-colored cuboid of one type. `pts` is permuted. When the
/// type has no candidate the result is a default cuboid with size 0.
AxisCuboid solve_lrc_type(std::span<Point3> pts, Color target, CuboidType type, SolveStats& stats,
                          const LmcOptions& opts = {});

/// Best `target`-colored cuboid over all three types. `pts` is permuted.
AxisCuboid solve_lrc(std::span<Point3> pts, Color target, SolveStats& stats, const LmcOptions& opts = {});

/// Larger of the red and blue answers; ties go to red.
AxisCuboid solve_lmc(std::span<Point3> pts, SolveStats& stats, const LmcOptions& opts = {});

/// Closed count of cuboid.color points, or nullopt when an opposite-colored
/// point lies strictly inside.
std::optional<std::size_t> rescan_cuboid(std::span<const Point3> pts, const AxisCuboid& c);

}  // namespace geosep
