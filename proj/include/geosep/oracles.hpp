#pragma once

// Brute-force references. They share only the frame arithmetic and the
// closed/open conventions with the solvers.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "geosep/geom.hpp"
#include "geosep/kdtree.hpp"
#include "geosep/mer.hpp"

namespace geosep {

struct OracleCapExceeded : std::runtime_error {
    OracleCapExceeded(std::size_t size, std::size_t cap);
};

inline constexpr std::size_t kLmrOracleCap = 40;
inline constexpr std::size_t kLwrOracleCap = 30;
inline constexpr std::size_t kLmcOracleCap = 24;

/// Closed-box membership count by linear scan.
template <class P, class Keys, class T>
std::size_t brute_count(std::span<const P> pts, const Keys& keys, const QueryBox<T, Keys::dims>& box) {
    std::size_t count = 0;
    for (const P& p : pts)
        if (box.contains(p, keys)) ++count;
    return count;
}

std::size_t brute_lrr(std::span<const Point2> pts, Color target, std::size_t cap = kLmrOracleCap);
std::size_t brute_lmr(std::span<const Point2> pts, std::size_t cap = kLmrOracleCap);

std::int64_t brute_lwr(std::span<const WeightedPoint2> pts, std::size_t cap = kLwrOracleCap);
/// Best axis-parallel rectangle weight, boundaries on point coordinates.
std::int64_t brute_lwr_axis(std::span<const WeightedPoint2> pts);

struct TypedCuboidSizes {
    std::size_t slab = 0;
    std::size_t bottom_only = 0;
    std::size_t top_anchored = 0;

    std::size_t best() const;
};

TypedCuboidSizes brute_lrc_typed(std::span<const Point3> pts, Color target, std::size_t cap = kLmcOracleCap);
std::size_t brute_lmc(std::span<const Point3> pts, std::size_t cap = kLmcOracleCap);

/// Every maximal empty rectangle among `pts`, sorted and without repeats.
std::vector<Rect2> naive_mers(std::span<const std::pair<Coord, Coord>> pts);

}  // namespace geosep
