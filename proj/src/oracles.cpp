#include "geosep/oracles.hpp"

#include <algorithm>
#include <string>

namespace geosep {

OracleCapExceeded::OracleCapExceeded(std::size_t size, std::size_t cap)
    : std::runtime_error("instance of " + std::to_string(size) + " points exceeds oracle cap " + std::to_string(cap)) {}

namespace {

void check_cap(std::size_t size, std::size_t cap) {
    if (size > cap) throw OracleCapExceeded(size, cap);
}

}  // namespace

std::size_t brute_lrr(std::span<const Point2> pts, Color target, std::size_t cap) {
    check_cap(pts.size(), cap);
    std::size_t targets = 0;
    bool spread = false;
    for (const Point2& p : pts) {
        if (p.color == target) ++targets;
        if (p.x != pts.front().x || p.y != pts.front().y) spread = true;
    }
    if (targets == pts.size() || !spread) return targets;

    std::size_t best = 0;
    std::vector<FrameCoords> coords(pts.size());
    std::vector<Wide> edges;
    for (const Point2& p : pts) {
        if (p.color == target) continue;
        for (const Point2& q : pts) {
            const auto frame = Frame::make(p, q);
            if (!frame) continue;
            for (int side : {1, -1}) {
                edges.assign({kWideNegInf, kWidePosInf});
                for (std::size_t i = 0; i < pts.size(); ++i) {
                    coords[i] = frame_coords(pts[i], *frame);
                    coords[i].v *= side;
                    if (pts[i].color != target) edges.push_back(coords[i].u);
                }
                std::sort(edges.begin(), edges.end());
                edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
                for (std::size_t a = 0; a < edges.size(); ++a) {
                    for (std::size_t b = a + 1; b < edges.size(); ++b) {
                        const Wide left = edges[a], right = edges[b];
                        Wide top = kWidePosInf;
                        for (std::size_t i = 0; i < pts.size(); ++i) {
                            if (pts[i].color == target) continue;
                            if (left < coords[i].u && coords[i].u < right && coords[i].v > 0)
                                top = std::min(top, coords[i].v);
                        }
                        std::size_t count = 0;
                        for (std::size_t i = 0; i < pts.size(); ++i) {
                            if (pts[i].color != target) continue;
                            const FrameCoords& c = coords[i];
                            if (left <= c.u && c.u <= right && 0 <= c.v && c.v <= top) ++count;
                        }
                        best = std::max(best, count);
                    }
                }
            }
        }
    }
    return best;
}

std::size_t brute_lmr(std::span<const Point2> pts, std::size_t cap) {
    return std::max(brute_lrr(pts, Color::Red, cap), brute_lrr(pts, Color::Blue, cap));
}

std::int64_t brute_lwr(std::span<const WeightedPoint2> pts, std::size_t cap) {
    check_cap(pts.size(), cap);
    if (pts.empty()) return 0;

    std::int64_t best = INT64_MIN;
    for (const WeightedPoint2& p : pts) {
        std::int64_t sum = 0;
        for (const WeightedPoint2& o : pts)
            if (o.x == p.x && o.y == p.y) sum += o.weight;
        best = std::max(best, sum);
    }

    struct Item {
        Wide u, v;
        std::int64_t w;
    };
    std::vector<Item> items;
    std::vector<Wide> levels;
    std::vector<std::pair<Wide, std::int64_t>> strip;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!pts[i].red()) continue;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i || !pts[j].red()) continue;
            const auto frame = Frame::make(pts[i], pts[j]);
            if (!frame) continue;
            for (int side : {1, -1}) {
                items.clear();
                levels.clear();
                for (const WeightedPoint2& p : pts) {
                    const FrameCoords c = frame_coords(p, *frame);
                    if (side * c.v < 0) continue;
                    items.push_back({c.u, side * c.v, p.weight});
                    levels.push_back(side * c.v);
                }
                std::sort(levels.begin(), levels.end());
                levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
                for (Wide top : levels) {
                    strip.clear();
                    for (const Item& it : items)
                        if (it.v <= top) strip.emplace_back(it.u, it.w);
                    std::sort(strip.begin(), strip.end());
                    // Best sum over runs of whole u-groups.
                    std::int64_t run = 0;
                    bool open = false;
                    for (std::size_t k = 0; k < strip.size();) {
                        std::int64_t group = 0;
                        std::size_t e = k;
                        for (; e < strip.size() && strip[e].first == strip[k].first; ++e) group += strip[e].second;
                        run = open && run > 0 ? run + group : group;
                        open = true;
                        best = std::max(best, run);
                        k = e;
                    }
                }
            }
        }
    }
    return best;
}

std::int64_t brute_lwr_axis(std::span<const WeightedPoint2> pts) {
    if (pts.empty()) return 0;
    std::vector<Coord> xs, ys;
    for (const WeightedPoint2& p : pts) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    std::int64_t best = INT64_MIN;
    for (std::size_t a = 0; a < xs.size(); ++a)
        for (std::size_t b = a; b < xs.size(); ++b)
            for (std::size_t c = 0; c < ys.size(); ++c)
                for (std::size_t d = c; d < ys.size(); ++d) {
                    std::int64_t sum = 0;
                    bool any = false;
                    for (const WeightedPoint2& p : pts) {
                        if (xs[a] <= p.x && p.x <= xs[b] && ys[c] <= p.y && p.y <= ys[d]) {
                            sum += p.weight;
                            any = true;
                        }
                    }
                    if (any) best = std::max(best, sum);
                }
    return best;
}

std::size_t TypedCuboidSizes::best() const { return std::max({slab, bottom_only, top_anchored}); }

TypedCuboidSizes brute_lrc_typed(std::span<const Point3> pts, Color target, std::size_t cap) {
    check_cap(pts.size(), cap);
    TypedCuboidSizes out;
    std::vector<Coord> xs{kCoordNegInf, kCoordPosInf};
    std::vector<Coord> ys{kCoordNegInf, kCoordPosInf};
    for (const Point3& p : pts) {
        if (p.color == target) continue;
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    for (auto* v : {&xs, &ys}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }

    std::vector<Coord> floors;
    for (std::size_t a = 0; a < xs.size(); ++a)
        for (std::size_t b = a + 1; b < xs.size(); ++b)
            for (std::size_t c = 0; c < ys.size(); ++c)
                for (std::size_t d = c + 1; d < ys.size(); ++d) {
                    const Coord xl = xs[a], xr = xs[b], yb = ys[c], yt = ys[d];
                    // z values of obstacles whose projection is interior.
                    floors.clear();
                    for (const Point3& p : pts) {
                        if (p.color == target) continue;
                        if (xl < p.x && p.x < xr && yb < p.y && p.y < yt) floors.push_back(p.z);
                    }
                    std::sort(floors.begin(), floors.end());
                    floors.erase(std::unique(floors.begin(), floors.end()), floors.end());
                    auto count = [&](Coord zlo, Coord zhi) {
                        std::size_t k = 0;
                        for (const Point3& p : pts) {
                            if (p.color != target) continue;
                            if (xl <= p.x && p.x <= xr && yb <= p.y && p.y <= yt && zlo <= p.z && p.z <= zhi) ++k;
                        }
                        return k;
                    };
                    if (floors.empty()) {
                        out.slab = std::max(out.slab, count(kCoordNegInf, kCoordPosInf));
                        continue;
                    }
                    out.bottom_only = std::max(out.bottom_only, count(floors.back(), kCoordPosInf));
                    out.top_anchored = std::max(out.top_anchored, count(kCoordNegInf, floors.front()));
                    for (std::size_t k = 0; k + 1 < floors.size(); ++k)
                        out.top_anchored = std::max(out.top_anchored, count(floors[k], floors[k + 1]));
                }
    return out;
}

std::size_t brute_lmc(std::span<const Point3> pts, std::size_t cap) {
    return std::max(brute_lrc_typed(pts, Color::Red, cap).best(), brute_lrc_typed(pts, Color::Blue, cap).best());
}

std::vector<Rect2> naive_mers(std::span<const std::pair<Coord, Coord>> pts) {
    std::vector<Coord> xs{kCoordNegInf, kCoordPosInf};
    std::vector<Coord> ys{kCoordNegInf, kCoordPosInf};
    for (const auto& [x, y] : pts) {
        xs.push_back(x);
        ys.push_back(y);
    }
    for (auto* v : {&xs, &ys}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    std::vector<Rect2> out;
    for (std::size_t a = 0; a < xs.size(); ++a)
        for (std::size_t b = a + 1; b < xs.size(); ++b)
            for (std::size_t c = 0; c < ys.size(); ++c)
                for (std::size_t d = c + 1; d < ys.size(); ++d) {
                    const Rect2 r{xs[a], xs[b], ys[c], ys[d]};
                    bool empty = true;
                    bool left = r.xl == kCoordNegInf, right = r.xr == kCoordPosInf;
                    bool bottom = r.yb == kCoordNegInf, top = r.yt == kCoordPosInf;
                    for (const auto& [x, y] : pts) {
                        if (r.contains_open(x, y)) empty = false;
                        const bool in_y = r.yb < y && y < r.yt;
                        const bool in_x = r.xl < x && x < r.xr;
                        if (in_y && x == r.xl) left = true;
                        if (in_y && x == r.xr) right = true;
                        if (in_x && y == r.yb) bottom = true;
                        if (in_x && y == r.yt) top = true;
                    }
                    if (empty && left && right && bottom && top) out.push_back(r);
                }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace geosep
