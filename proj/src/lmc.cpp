#include "geosep/lmc.hpp"

#include <algorithm>
#include <stdexcept>

#include "geosep/kdtree.hpp"
#include "geosep/mer.hpp"
#include "geosep/select.hpp"

namespace geosep {

namespace {

// Descending z, ties by x, y, id; the sweep order for obstacles.
bool above(const Point3& a, const Point3& b) {
    if (a.z != b.z) return a.z > b.z;
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.id < b.id;
}

class CuboidSearch {
public:
    CuboidSearch(std::span<Point3> pts, Color target, SolveStats& stats, const LmcOptions& opts)
        : pts_(pts), stats_(stats), opts_(opts) {
        best_.color = target;
        auto split = std::partition(pts.begin(), pts.end(), [&](const Point3& p) { return p.color == target; });
        targets_ = static_cast<std::size_t>(split - pts.begin());
        heap_sort(split, pts.end(), above);
    }

    const AxisCuboid& best() const { return best_; }

    void run(CuboidType type) {
        switch (type) {
            case CuboidType::Slab: slabs(); break;
            case CuboidType::BottomOnly: bottom_anchored(); break;
            case CuboidType::TopAnchored: top_anchored(); break;
        }
    }

private:
    std::span<Point3> obstacles() const { return pts_.subspan(targets_); }

    // Gathers targets with zlo <= z <= zhi at the front and builds the tree
    // over them.
    void prepare_targets(Coord zlo, Coord zhi) {
        auto end = std::partition(pts_.begin(), pts_.begin() + static_cast<std::ptrdiff_t>(targets_),
                                  [&](const Point3& p) { return zlo <= p.z && p.z <= zhi; });
        tree_ = pts_.first(static_cast<std::size_t>(end - pts_.begin()));
        build_kdtree(tree_, AxisKeys<2>{});
        ++stats_.trees_built;
    }

    void offer(const Rect2& r, Coord zlo, Coord zhi) {
        QueryBox<Coord, 2> box;
        box.lo = {r.xl, r.yb};
        box.hi = {r.xr, r.yt};
        const std::size_t count = count_in_range(std::span<const Point3>(tree_), AxisKeys<2>{}, box, scratch_);
        stats_.visited_nodes += scratch_.visited;
        if (!found_ || count > best_.size) {
            found_ = true;
            best_.lo = {r.xl, r.yb, zlo};
            best_.hi = {r.xr, r.yt, zhi};
            best_.size = count;
        }
    }

    void slabs() {
        prepare_targets(kCoordNegInf, kCoordPosInf);
        std::span<Point3> obs = obstacles();
        enumerate_mers(obs, [&](const Rect2& r) { offer(r, kCoordNegInf, kCoordPosInf); });
        heap_sort(obs.begin(), obs.end(), above);
    }

    // Bottom face through obstacle i, top open: the obstacles strictly above
    // it form the MER instance, and its projection must be interior.
    void bottom_anchored() {
        std::span<Point3> obs = obstacles();
        for (std::size_t i = 0; i < obs.size(); ++i) {
            const Point3 anchor = obs[i];
            ++stats_.candidate_pairs;
            std::size_t higher = 0;
            while (higher < obs.size() && obs[higher].z > anchor.z) ++higher;
            bool built = false;
            std::span<Point3> instance = obs.first(higher);
            enumerate_mers(instance, [&](const Rect2& r) {
                if (!r.contains_open(anchor.x, anchor.y)) return;
                if (!built) {
                    prepare_targets(anchor.z, kCoordPosInf);
                    built = true;
                }
                offer(r, anchor.z, kCoordPosInf);
            });
            heap_sort(instance.begin(), instance.end(), above);
        }
    }

    void check_stair(std::span<const Point3> arr, const StairSet& s, int quadrant) const {
        if (!opts_.check_stairs) return;
        if (!stair_matches_scratch(arr, s, quadrant)) throw std::logic_error("staircase invariant violated");
    }

    // Top face through obstacle i. Obstacles strictly below are swept
    // downward; each one is a candidate bottom, and the staircases around the
    // anchor's projection hold the obstacles already passed.
    void top_anchored() {
        std::span<Point3> obs = obstacles();
        for (std::size_t i = 0; i < obs.size(); ++i) {
            const Point3 anchor = obs[i];
            ++stats_.candidate_pairs;
            std::size_t start = 0;
            while (start < obs.size() && obs[start].z >= anchor.z) ++start;
            std::span<Point3> region = obs.subspan(start);

            StairSet stairs;
            stairs.cx = anchor.x;
            stairs.cy = anchor.y;
            auto cursor = region.begin();
            for (int quadrant = 0; quadrant < 4; ++quadrant) {
                auto stop = quadrant == 3 ? region.end() : std::partition(cursor, region.end(), [&](const Point3& p) {
                    return quadrant_of(p.x, p.y, anchor.x, anchor.y) == quadrant;
                });
                heap_sort(cursor, stop, above);
                QuadrantBlock& q = stairs.blocks[quadrant];
                q.begin = static_cast<std::size_t>(cursor - region.begin());
                q.end = static_cast<std::size_t>(stop - region.begin());
                cursor = stop;
            }

            std::span<const Point3> view(region);
            while (true) {
                int next = -1;
                for (int quadrant = 0; quadrant < 4; ++quadrant) {
                    const QuadrantBlock& q = stairs.blocks[quadrant];
                    if (q.begin + q.swept >= q.end) continue;
                    if (next < 0 ||
                        above(region[q.begin + q.swept], region[stairs.blocks[next].begin + stairs.blocks[next].swept]))
                        next = quadrant;
                }
                if (next < 0) break;
                QuadrantBlock& q = stairs.blocks[next];
                const Point3 floor = region[q.begin + q.swept];

                if (!stairs_block(view, stairs, floor.x, floor.y)) {
                    bool built = false;
                    compute_max_mer(view, stairs, floor.x, floor.y, [&](const Rect2& r) {
                        if (!built) {
                            prepare_targets(floor.z, anchor.z);
                            built = true;
                        }
                        offer(r, floor.z, anchor.z);
                    });
                }
                if (stair_shadows(view, stairs, next, floor)) {
                    ++q.swept;
                } else {
                    update_stair(region, stairs, next);
                }
                check_stair(view, stairs, next);
            }

            // The box's bottom face closes the sweep.
            bool built = false;
            compute_max_mer(view, stairs, anchor.x, anchor.y, [&](const Rect2& r) {
                if (!built) {
                    prepare_targets(kCoordNegInf, anchor.z);
                    built = true;
                }
                offer(r, kCoordNegInf, anchor.z);
            });
            heap_sort(region.begin(), region.end(), above);
        }
    }

    std::span<Point3> pts_;
    SolveStats& stats_;
    const LmcOptions& opts_;
    std::size_t targets_ = 0;
    std::span<Point3> tree_;
    QueryScratch<2> scratch_;
    AxisCuboid best_;
    bool found_ = false;
};

}  // namespace

bool AxisCuboid::contains_closed(const Point3& p) const {
    const std::array<Coord, 3> c{p.x, p.y, p.z};
    for (int d = 0; d < 3; ++d)
        if (c[d] < lo[d] || c[d] > hi[d]) return false;
    return true;
}

bool AxisCuboid::contains_open(const Point3& p) const {
    const std::array<Coord, 3> c{p.x, p.y, p.z};
    for (int d = 0; d < 3; ++d)
        if (c[d] <= lo[d] || c[d] >= hi[d]) return false;
    return true;
}

AxisCuboid solve_lrc_type(std::span<Point3> pts, Color target, CuboidType type, SolveStats& stats,
                          const LmcOptions& opts) {
    CuboidSearch search(pts, target, stats, opts);
    search.run(type);
    return search.best();
}

AxisCuboid solve_lrc(std::span<Point3> pts, Color target, SolveStats& stats, const LmcOptions& opts) {
    CuboidSearch search(pts, target, stats, opts);
    search.run(CuboidType::Slab);
    search.run(CuboidType::BottomOnly);
    search.run(CuboidType::TopAnchored);
    return search.best();
}

AxisCuboid solve_lmc(std::span<Point3> pts, SolveStats& stats, const LmcOptions& opts) {
    const AxisCuboid red = solve_lrc(pts, Color::Red, stats, opts);
    const AxisCuboid blue = solve_lrc(pts, Color::Blue, stats, opts);
    return blue.size > red.size ? blue : red;
}

std::optional<std::size_t> rescan_cuboid(std::span<const Point3> pts, const AxisCuboid& c) {
    std::size_t count = 0;
    for (const Point3& p : pts) {
        if (p.color == c.color) {
            if (c.contains_closed(p)) ++count;
        } else if (c.contains_open(p)) {
            return std::nullopt;
        }
    }
    return count;
}

}  // namespace geosep
