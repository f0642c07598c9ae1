#pragma once

// Maximal empty rectangles among projected obstacle points, and the four
// staircases around a pivot used by the cuboid sweep. Everything works in
// place over the caller's array; points need x, y and id.

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "geosep/geom.hpp"
#include "geosep/select.hpp"

namespace geosep {

/// Open rectangle (xl, xr) x (yb, yt); sentinel coordinates mean unbounded.
struct Rect2 {
    Coord xl = kCoordNegInf;
    Coord xr = kCoordPosInf;
    Coord yb = kCoordNegInf;
    Coord yt = kCoordPosInf;

    bool contains_open(Coord x, Coord y) const { return xl < x && x < xr && yb < y && y < yt; }
    friend bool operator==(const Rect2&, const Rect2&) = default;
    friend auto operator<=>(const Rect2&, const Rect2&) = default;
};

template <class P>
bool less_by_y(const P& a, const P& b) {
    if (a.y != b.y) return a.y < b.y;
    if (a.x != b.x) return a.x < b.x;
    return a.id < b.id;
}

template <class P>
bool less_by_x(const P& a, const P& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.id < b.id;
}

/// Calls emit(Rect2) for every maximal empty rectangle among `pts` (open
/// interiors, unbounded sides allowed). A rectangle may be emitted more than
/// once when several points support the same edge. Leaves `pts` sorted by y.
template <class P, class Emit>
void enumerate_mers(std::span<P> pts, Emit&& emit) {
    const std::size_t m = pts.size();
    if (m == 0) {
        emit(Rect2{});
        return;
    }

    // Vertical slabs between consecutive distinct x values.
    heap_sort(pts.begin(), pts.end(), less_by_x<P>);
    emit(Rect2{kCoordNegInf, pts[0].x, kCoordNegInf, kCoordPosInf});
    for (std::size_t i = 1; i < m; ++i)
        if (pts[i].x != pts[i - 1].x) emit(Rect2{pts[i - 1].x, pts[i].x, kCoordNegInf, kCoordPosInf});
    emit(Rect2{pts[m - 1].x, kCoordPosInf, kCoordNegInf, kCoordPosInf});

    heap_sort(pts.begin(), pts.end(), less_by_y<P>);

    // Rectangles whose bottom edge passes through pts[b]: sweep upward.
    for (std::size_t b = 0; b < m; ++b) {
        const Coord bx = pts[b].x;
        const Coord by = pts[b].y;
        Coord lo = kCoordNegInf;
        Coord hi = kCoordPosInf;
        std::size_t k = b + 1;
        while (k < m && pts[k].y == by) ++k;
        bool stopped = false;
        while (k < m && !stopped) {
            const Coord level = pts[k].y;
            bool hit = false;
            Coord next_lo = lo;
            Coord next_hi = hi;
            for (; k < m && pts[k].y == level; ++k) {
                const Coord x = pts[k].x;
                if (x <= lo || x >= hi) continue;
                hit = true;
                if (x == bx) stopped = true;
                if (x < bx && x > next_lo) next_lo = x;
                if (x > bx && x < next_hi) next_hi = x;
            }
            if (hit) emit(Rect2{lo, hi, by, level});
            lo = next_lo;
            hi = next_hi;
        }
        if (!stopped) emit(Rect2{lo, hi, by, kCoordPosInf});
    }

    // Rectangles open below whose top edge passes through pts[t].
    for (std::size_t t = m; t-- > 0;) {
        const Coord tx = pts[t].x;
        const Coord ty = pts[t].y;
        Coord lo = kCoordNegInf;
        Coord hi = kCoordPosInf;
        bool stopped = false;
        for (std::size_t k = 0; k < m && pts[k].y < ty; ++k) {
            const Coord x = pts[k].x;
            if (x <= lo || x >= hi) continue;
            if (x == tx) {
                stopped = true;
                break;
            }
            if (x < tx) lo = x;
            if (x > tx) hi = x;
        }
        if (!stopped) emit(Rect2{lo, hi, kCoordNegInf, ty});
    }
}

/// Quadrants around a pivot c: 0 = {x >= cx, y >= cy}, 1 = {x < cx, y >= cy},
/// 2 = {x < cx, y < cy}, 3 = {x >= cx, y < cy}.
inline int quadrant_of(Coord x, Coord y, Coord cx, Coord cy) {
    if (y >= cy) return x >= cx ? 0 : 1;
    return x < cx ? 2 : 3;
}

/// Coordinates reflected into quadrant 0, measured from the pivot.
struct Reflected {
    Coord rx = 0;
    Coord ry = 0;
};

inline Reflected reflect(Coord x, Coord y, Coord cx, Coord cy, int quadrant) {
    const Coord dx = x - cx;
    const Coord dy = y - cy;
    switch (quadrant) {
        case 0: return {dx, dy};
        case 1: return {-dx, dy};
        case 2: return {-dx, -dy};
        default: return {dx, -dy};
    }
}

/// One quadrant's block [begin, end) of the caller's array:
/// [begin, begin + stair_len) is the staircase sorted by rx ascending (so ry
/// descending), [begin + stair_len, begin + swept) holds swept points that
/// are shadowed, and [begin + swept, end) the unswept remainder.
struct QuadrantBlock {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t stair_len = 0;
    std::size_t swept = 0;
};

struct StairSet {
    Coord cx = 0;
    Coord cy = 0;
    std::array<QuadrantBlock, 4> blocks{};

    template <class P>
    Reflected reflected(const P& p, int quadrant) const {
        return reflect(p.x, p.y, cx, cy, quadrant);
    }
};

/// True when some stair point of `quadrant` is weakly closer to the pivot
/// than b in both reflected coordinates.
template <class P>
bool stair_shadows(std::span<const P> arr, const StairSet& s, int quadrant, const P& b) {
    const QuadrantBlock& q = s.blocks[quadrant];
    const Reflected rb = s.reflected(b, quadrant);
    for (std::size_t i = q.begin; i < q.begin + q.stair_len; ++i) {
        const Reflected r = s.reflected(arr[i], quadrant);
        if (r.rx <= rb.rx && r.ry <= rb.ry) return true;
    }
    return false;
}

/// True when some stair point of any quadrant lies in the closed box spanned
/// by the pivot and (bx, by); every rectangle containing both strictly would
/// then contain that stair point.
template <class P>
bool stairs_block(std::span<const P> arr, const StairSet& s, Coord bx, Coord by) {
    const Coord lx = std::min(s.cx, bx), hx = std::max(s.cx, bx);
    const Coord ly = std::min(s.cy, by), hy = std::max(s.cy, by);
    for (const QuadrantBlock& q : s.blocks) {
        for (std::size_t i = q.begin; i < q.begin + q.stair_len; ++i) {
            const P& p = arr[i];
            if (lx <= p.x && p.x <= hx && ly <= p.y && p.y <= hy) return true;
        }
    }
    return false;
}

/// Inserts the next unswept point of `quadrant` (at begin + swept) into the
/// staircase, moving the stair points it shadows out of the stair prefix,
/// and advances the swept index. Pre: the point is not shadowed.
template <class P>
void update_stair(std::span<P> arr, StairSet& s, int quadrant) {
    QuadrantBlock& q = s.blocks[quadrant];
    const std::size_t at = q.begin + q.swept;
    const Reflected rb = s.reflected(arr[at], quadrant);
    const std::size_t stair_end = q.begin + q.stair_len;

    std::size_t a = q.begin;
    while (a < stair_end && s.reflected(arr[a], quadrant).rx < rb.rx) ++a;
    std::size_t e = a;
    while (e < stair_end && s.reflected(arr[e], quadrant).ry >= rb.ry) ++e;
    const std::size_t removed = e - a;

    if (removed > 0) {
        // The new point takes the first shadowed slot; the rest of the
        // shadowed run is rotated past the surviving tail.
        std::swap(arr[a], arr[at]);
        for (std::size_t r = e; r < stair_end; ++r) std::swap(arr[r], arr[r - (removed - 1)]);
        q.stair_len -= removed - 1;
    } else {
        std::swap(arr[stair_end], arr[at]);
        for (std::size_t r = stair_end; r > a; --r) std::swap(arr[r - 1], arr[r]);
        ++q.stair_len;
    }
    ++q.swept;
}

/// Calls emit(Rect2) for every maximal rectangle, empty with respect to the
/// staircase points, that contains the pivot and (bx, by) in its open
/// interior. Pass the pivot itself as (bx, by) for rectangles around the
/// pivot alone.
template <class P, class Emit>
void compute_max_mer(std::span<const P> arr, const StairSet& s, Coord bx, Coord by, Emit&& emit) {
    const Coord low_x = std::min(s.cx, bx), high_x = std::max(s.cx, bx);
    const Coord low_y = std::min(s.cy, by), high_y = std::max(s.cy, by);

    auto for_each_stair_point = [&](auto&& fn) {
        for (const QuadrantBlock& q : s.blocks)
            for (std::size_t i = q.begin; i < q.begin + q.stair_len; ++i) fn(arr[i]);
    };

    // Candidate top edges: open, or the y of a stair point above both.
    auto try_top = [&](Coord top) {
        auto try_bottom = [&](Coord bottom) {
            Coord xl = kCoordNegInf;
            Coord xr = kCoordPosInf;
            bool blocked = false;
            for_each_stair_point([&](const P& p) {
                if (p.y <= bottom || p.y >= top) return;
                if (low_x <= p.x && p.x <= high_x) blocked = true;
                if (p.x < low_x) xl = std::max(xl, p.x);
                if (p.x > high_x) xr = std::min(xr, p.x);
            });
            if (blocked) return;
            // Maximal only if the top and bottom edges each touch a point.
            bool top_ok = top == kCoordPosInf;
            bool bottom_ok = bottom == kCoordNegInf;
            for_each_stair_point([&](const P& p) {
                if (p.x <= xl || p.x >= xr) return;
                if (p.y == top) top_ok = true;
                if (p.y == bottom) bottom_ok = true;
            });
            if (top_ok && bottom_ok) emit(Rect2{xl, xr, bottom, top});
        };
        try_bottom(kCoordNegInf);
        std::size_t idx = 0;
        for_each_stair_point([&](const P& p) {
            ++idx;
            if (p.y >= low_y) return;
            // Skip repeated y values so each bottom is tried once.
            std::size_t j = 0;
            bool seen = false;
            for_each_stair_point([&](const P& o) {
                if (++j < idx && o.y == p.y) seen = true;
            });
            if (!seen) try_bottom(p.y);
        });
    };

    try_top(kCoordPosInf);
    std::size_t idx = 0;
    for_each_stair_point([&](const P& p) {
        ++idx;
        if (p.y <= high_y) return;
        std::size_t j = 0;
        bool seen = false;
        for_each_stair_point([&](const P& o) {
            if (++j < idx && o.y == p.y) seen = true;
        });
        if (!seen) try_top(p.y);
    });
}

/// Recomputes the staircase of `quadrant` from its swept points and compares
/// it with the maintained prefix. Allocates; meant for checking only.
template <class P>
bool stair_matches_scratch(std::span<const P> arr, const StairSet& s, int quadrant) {
    const QuadrantBlock& q = s.blocks[quadrant];
    if (q.stair_len > q.swept || q.begin + q.swept > q.end) return false;
    std::vector<std::pair<Coord, Coord>> swept;
    for (std::size_t i = q.begin; i < q.begin + q.swept; ++i) {
        const Reflected r = s.reflected(arr[i], quadrant);
        if (r.rx < 0 || r.ry < 0) return false;
        swept.emplace_back(r.rx, r.ry);
    }
    std::sort(swept.begin(), swept.end());
    swept.erase(std::unique(swept.begin(), swept.end()), swept.end());
    std::vector<std::pair<Coord, Coord>> minimal;
    for (const auto& [rx, ry] : swept) {
        // Sorted by rx then ry: a point survives if its ry beats every earlier one.
        if (minimal.empty() || ry < minimal.back().second) minimal.emplace_back(rx, ry);
    }
    if (minimal.size() != q.stair_len) return false;
    for (std::size_t i = 0; i < q.stair_len; ++i) {
        const Reflected r = s.reflected(arr[q.begin + i], quadrant);
        if (r.rx != minimal[i].first || r.ry != minimal[i].second) return false;
    }
    return true;
}

}  // namespace geosep
