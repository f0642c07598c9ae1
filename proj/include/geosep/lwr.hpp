#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "geosep/geom.hpp"
#include "geosep/lmr.hpp"

namespace geosep {

/// Rectangle maximizing the sum of signed weights. For RectKind::Framed the
/// bottom is v = 0 on `side`, and [left, right] x [0, top] is closed. For
/// RectKind::Point it is the single location frame.p.
struct WeightedRect {
    RectKind kind = RectKind::Point;
    Frame frame{};
    int side = 1;
    Wide left = kWideNegInf;
    Wide right = kWidePosInf;
    Wide top = kWidePosInf;
    std::int64_t weight = 0;
};

/// Best rectangle whose bottom edge lies on the line through the anchors of
/// `frame`, on the given side, with a red point on its top edge.
std::optional<WeightedRect> process_pair_weighted(std::span<const WeightedPoint2> pts, const Frame& frame, int side,
                                                  SolveStats& stats);

/// Maximum-weight rectangle of arbitrary orientation. Not in place: uses
/// O(n + m) auxiliary storage. `aux_bytes` (optional) receives the peak
/// auxiliary storage used by the sweep structures.
WeightedRect solve_lwr(std::span<const WeightedPoint2> pts, SolveStats& stats, std::size_t* aux_bytes = nullptr);

/// Closed weight sum of the rectangle.
std::int64_t rescan_weight(std::span<const WeightedPoint2> pts, const WeightedRect& rect);

bool weighted_rect_contains(const WeightedRect& rect, const WeightedPoint2& p);

}  // namespace geosep
