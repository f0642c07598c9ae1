#pragma once

// Array-implicit k-d tree. The tree lives in the point array itself: the
// root is element 1 (1-based), children of i are 2i and 2i+1. Construction is
// level by level and both construction and queries use a constant number of
// scalars; nothing recurses.

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <concepts>
#include <cstddef>
#include <span>

#include "geosep/geom.hpp"
#include "geosep/select.hpp"

namespace geosep {

inline std::size_t floor_log2(std::size_t n) {
    assert(n > 0);
    return static_cast<std::size_t>(std::bit_width(n)) - 1;
}

/// Shape of level `level` of a complete tree of n nodes whose last level is
/// left-aligned. Level i holds, from left to right, `full_count` subtrees of
/// `size_full` nodes, at most one subtree of `size_partial` nodes, then
/// subtrees of `size_short` nodes.
struct BlockParams {
    std::size_t n = 0;
    std::size_t height = 0;
    std::size_t kappa = 0;
    std::size_t level = 0;
    std::size_t nodes = 0;
    std::size_t full_count = 0;
    std::size_t size_full = 0;
    std::size_t size_partial = 0;
    std::size_t size_short = 0;
    std::size_t level_begin = 0;  // 1-based index of the first node on the level

    /// 1-based array index where block j (1-based) starts.
    std::size_t block_begin(std::size_t j) const {
        if (j <= full_count + 1) return level_begin + (j - 1) * size_full;
        return level_begin + full_count * size_full + size_partial + (j - full_count - 2) * size_short;
    }

    std::size_t block_size(std::size_t j) const {
        if (j <= full_count) return size_full;
        if (j == full_count + 1) return size_partial;
        return size_short;
    }
};

inline BlockParams block_params(std::size_t n, std::size_t level) {
    BlockParams bp;
    bp.n = n;
    bp.height = floor_log2(n);
    assert(level <= bp.height);
    bp.kappa = n - ((std::size_t{1} << bp.height) - 1);
    bp.level = level;
    const std::size_t shift = bp.height - level;
    bp.nodes = level < bp.height ? (std::size_t{1} << level) : bp.kappa;
    // Subtrees whose leaf quota at the last level is completely filled.
    bp.full_count = bp.kappa >> shift;
    bp.size_full = (std::size_t{2} << shift) - 1;
    bp.size_short = (std::size_t{1} << shift) - 1;
    bp.size_partial = bp.size_short + bp.kappa - (bp.full_count << shift);
    bp.level_begin = std::size_t{1} << level;
    return bp;
}

/// Number of nodes under (and including) node t; 0 when t is absent.
inline std::size_t subtree_size(std::size_t n, std::size_t t) {
    if (t == 0 || t > n) return 0;
    const std::size_t level = floor_log2(t);
    const BlockParams bp = block_params(n, level);
    return bp.block_size(t - bp.level_begin + 1);
}

template <class K, class P>
concept KdKeys = requires(const K& keys, const P& p, int d) {
    { K::dims } -> std::convertible_to<int>;
    typename K::value_type;
    { keys(p, d) } -> std::convertible_to<typename K::value_type>;
    { p.id } -> std::convertible_to<std::uint32_t>;
};

/// Strict total order used at splitting dimension d: keys cyclically from d,
/// then the stable id.
template <class P, class Keys>
struct KdOrder {
    const Keys* keys;
    int dim;

    bool operator()(const P& a, const P& b) const {
        for (int t = 0; t < Keys::dims; ++t) {
            const int d = (dim + t) % Keys::dims;
            const auto ka = (*keys)(a, d);
            const auto kb = (*keys)(b, d);
            if (ka != kb) return ka < kb;
        }
        return a.id < b.id;
    }
};

/// Builds the implicit tree in place. After return, `pts` is a permutation of
/// its input and satisfies the partition invariant at every node.
template <class P, class Keys>
    requires KdKeys<Keys, P>
void build_kdtree(std::span<P> pts, const Keys& keys) {
    const std::size_t n = pts.size();
    if (n <= 1) return;
    const std::size_t h = floor_log2(n);
    P* base = pts.data() - 1;  // 1-based view

    for (std::size_t level = 0; level < h; ++level) {
        const BlockParams bp = block_params(n, level);
        const KdOrder<P, Keys> less{&keys, static_cast<int>(level % Keys::dims)};
        const std::size_t blocks = bp.nodes;

        // Block median to the block head; smaller half, then larger half.
        for (std::size_t j = 1; j <= blocks; ++j) {
            const std::size_t begin = bp.block_begin(j);
            const std::size_t size = bp.block_size(j);
            const std::size_t node = bp.level_begin + j - 1;
            const std::size_t left = subtree_size(n, 2 * node);
            select_and_partition(std::span<P>(base + begin, size), less, left + 1);
        }

        // Gather the block heads into [2^level, 2^(level+1)) while keeping
        // the half-blocks contiguous and in order. Adjacent runs are merged
        // bottom-up: [heads A][rest A][heads B][rest B] becomes
        // [heads A][heads B][rest A][rest B] by one rotation.
        for (std::size_t width = 1; width < blocks; width *= 2) {
            for (std::size_t j = 1; j + width <= blocks; j += 2 * width) {
                const std::size_t jb = j + width;
                const std::size_t jend = std::min(j + 2 * width, blocks + 1);
                P* a_rest = base + bp.block_begin(j) + width;
                P* b_heads = base + bp.block_begin(jb);
                std::rotate(a_rest, b_heads, b_heads + (jend - jb));
            }
        }
    }
}

/// Closed axis box in key space.
template <class T, int K>
struct QueryBox {
    std::array<T, K> lo{};
    std::array<T, K> hi{};

    template <class P, class Keys>
    bool contains(const P& p, const Keys& keys) const {
        for (int d = 0; d < K; ++d) {
            const auto v = keys(p, d);
            if (v < lo[d] || v > hi[d]) return false;
        }
        return true;
    }
};

/// Constant-size query state. A non-zero slot holds the index of the
/// ancestor whose split value bounds cell(current) on that side, and is set
/// only while that bound lies inside the query. All slots set means the cell
/// is contained in the query.
template <int K>
struct QueryScratch {
    std::array<std::size_t, 2 * K> slots{};  // [2d] low side, [2d+1] high side
    std::size_t current = 1;
    std::size_t level = 0;
    int state = 0;
    std::size_t count = 0;
    std::size_t visited = 0;

    void reset() {
        slots.fill(0);
        current = 1;
        level = 0;
        state = 0;
        count = 0;
        visited = 0;
    }

    bool all_set() const {
        for (std::size_t s : slots)
            if (s == 0) return false;
        return true;
    }

    void release(std::size_t node) {
        for (std::size_t& s : slots)
            if (s == node) s = 0;
    }
};

namespace detail {

// Drives the stackless walk. `on_inside(t)` is called for every node whose
// cell is contained in the query (the walk then retreats), `on_point(t)` for
// every other visited node whose point lies in the query.
template <class P, class Keys, class T, class Inside, class Point>
void walk_range(std::span<const P> pts, const Keys& keys, const QueryBox<T, Keys::dims>& box,
                QueryScratch<Keys::dims>& s, Inside&& on_inside, Point&& on_point) {
    constexpr int K = Keys::dims;
    const std::size_t n = pts.size();
    s.reset();
    if (n == 0) return;
    const P* base = pts.data() - 1;

    while (true) {
        const std::size_t cur = s.current;
        if (s.state == 0) {
            ++s.visited;
            if (s.all_set()) {
                on_inside(cur);
                s.state = 2;
                continue;
            }
            if (box.contains(base[cur], keys)) on_point(cur);
            const int d = static_cast<int>(s.level % K);
            const auto split = keys(base[cur], d);
            if (2 * cur <= n && box.lo[d] <= split) {
                if (split <= box.hi[d] && s.slots[2 * d + 1] == 0) s.slots[2 * d + 1] = cur;
                s.current = 2 * cur;
                ++s.level;
            } else {
                s.state = 1;
            }
        } else if (s.state == 1) {
            const int d = static_cast<int>(s.level % K);
            const auto split = keys(base[cur], d);
            if (2 * cur + 1 <= n && box.hi[d] >= split) {
                if (split >= box.lo[d] && s.slots[2 * d] == 0) s.slots[2 * d] = cur;
                s.current = 2 * cur + 1;
                ++s.level;
                s.state = 0;
            } else {
                s.state = 2;
            }
        } else {
            if (cur == 1) return;
            const std::size_t parent = cur / 2;
            s.release(parent);
            s.state = (cur % 2 == 0) ? 1 : 2;
            s.current = parent;
            --s.level;
        }
    }
}

}  // namespace detail

/// Number of points inside the closed box.
template <class P, class Keys, class T>
std::size_t count_in_range(std::span<const P> pts, const Keys& keys, const QueryBox<T, Keys::dims>& box,
                           QueryScratch<Keys::dims>& scratch) {
    const std::size_t n = pts.size();
    detail::walk_range(
        pts, keys, box, scratch, [&](std::size_t t) { scratch.count += subtree_size(n, t); },
        [&](std::size_t) { ++scratch.count; });
    return scratch.count;
}

/// Calls visit(point) once per point inside the closed box; returns the
/// number of visits. Subtrees whose cell lies inside the box are exhausted
/// level by level over their index ranges [t*2^j, t*2^j + 2^j).
template <class P, class Keys, class T, class Visit>
std::size_t report_in_range(std::span<const P> pts, const Keys& keys, const QueryBox<T, Keys::dims>& box,
                            QueryScratch<Keys::dims>& scratch, Visit&& visit) {
    const std::size_t n = pts.size();
    const P* base = pts.data() - 1;
    detail::walk_range(
        pts, keys, box, scratch,
        [&](std::size_t t) {
            for (std::size_t lo = t, hi = t; lo <= n; lo = 2 * lo, hi = 2 * hi + 1) {
                const std::size_t last = std::min(hi, n);
                for (std::size_t i = lo; i <= last; ++i) {
                    visit(base[i]);
                    ++scratch.count;
                }
            }
        },
        [&](std::size_t t) {
            visit(base[t]);
            ++scratch.count;
        });
    return scratch.count;
}

/// Verifies the partition invariant at every node. O(n log n).
template <class P, class Keys>
bool check_kdtree(std::span<const P> pts, const Keys& keys) {
    const std::size_t n = pts.size();
    const P* base = pts.data() - 1;
    for (std::size_t t = 1; t <= n; ++t) {
        const KdOrder<P, Keys> less{&keys, static_cast<int>(floor_log2(t) % Keys::dims)};
        for (std::size_t side = 0; side < 2; ++side) {
            const std::size_t child = 2 * t + side;
            for (std::size_t lo = child, hi = child; lo <= n; lo = 2 * lo, hi = 2 * hi + 1) {
                for (std::size_t i = lo; i <= std::min(hi, n); ++i) {
                    const bool ok = side == 0 ? less(base[i], base[t]) : less(base[t], base[i]);
                    if (!ok) return false;
                }
            }
        }
    }
    return true;
}

/// Axis-parallel keys for points with x, y (and z when Dims == 3).
template <int Dims>
struct AxisKeys {
    static constexpr int dims = Dims;
    using value_type = Coord;

    template <class P>
    Coord operator()(const P& p, int d) const {
        if constexpr (Dims == 3) {
            return d == 0 ? p.x : (d == 1 ? p.y : p.z);
        } else {
            return d == 0 ? p.x : p.y;
        }
    }
};

}  // namespace geosep
