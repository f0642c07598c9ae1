#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "geosep/geom.hpp"

namespace geosep {

/// Counters shared by the solvers.
struct SolveStats {
    std::uint64_t candidate_pairs = 0;
    std::uint64_t visited_nodes = 0;
    std::uint64_t trees_built = 0;

    SolveStats& operator+=(const SolveStats& o) {
        candidate_pairs += o.candidate_pairs;
        visited_nodes += o.visited_nodes;
        trees_built += o.trees_built;
        return *this;
    }
};

enum class RectKind : std::uint8_t {
    Plane,   // no obstacle points: the whole plane
    Point,   // every point coincides; a degenerate rectangle at that spot
    Framed,  // bottom edge on the line through frame.p and frame.q
};

/// Rectangle in the frame of a candidate pair. Bottom is v = 0 on the chosen
/// side; left/right bound u, top bounds side*v. All bounds are closed and
/// may be infinite.
struct OrientedRect {
    RectKind kind = RectKind::Framed;
    Frame frame{};
    int side = 1;
    Wide left = kWideNegInf;
    Wide right = kWidePosInf;
    Wide top = kWidePosInf;
    std::size_t size = 0;
    Color color = Color::Red;
};

/// Best `target`-colored rectangle for one pair and side, or nullopt when
/// the sweep emits nothing. `pts` is permuted.
std::optional<OrientedRect> process_candidate_pair(std::span<Point2> pts, const Frame& frame, int side,
                                                   Color target, SolveStats& stats);

/// Largest rectangle of `target` color whose open interior avoids the other
/// color. `pts` is permuted.
OrientedRect solve_lrr(std::span<Point2> pts, Color target, SolveStats& stats);

struct LmrOptions {
    unsigned threads = 1;
};

/// Larger of the red and blue answers; ties go to red.
OrientedRect solve_lmr(std::span<Point2> pts, SolveStats& stats, const LmrOptions& opts = {});

/// Closed count of rect.color points inside the rectangle, or nullopt when an
/// opposite-colored point lies strictly inside.
std::optional<std::size_t> rescan_rect(std::span<const Point2> pts, const OrientedRect& rect);

/// Frame-independent membership tests used by rescans and oracles.
bool rect_contains_closed(const OrientedRect& rect, const Point2& p);
bool rect_contains_open(const OrientedRect& rect, const Point2& p);

}  // namespace geosep
