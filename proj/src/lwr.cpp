#include "geosep/lwr.hpp"

#include <algorithm>
#include <vector>

#include "geosep/weight_tree.hpp"

namespace geosep {

namespace {

struct Projected {
    Wide u = 0;
    Wide v = 0;
    std::int64_t weight = 0;
    std::uint32_t id = 0;
};

struct Workspace {
    std::vector<Projected> side;
    WeightTree tree;

    explicit Workspace(std::size_t n) {
        side.reserve(n);
        tree.reserve(n);
    }

    std::size_t bytes() const { return side.capacity() * sizeof(Projected) + tree.storage_bytes(); }
};

std::optional<WeightedRect> sweep_pair(std::span<const WeightedPoint2> pts, const Frame& frame, int side,
                                       Workspace& ws) {
    ws.side.clear();
    for (const WeightedPoint2& p : pts) {
        const FrameCoords c = frame_coords(p, frame);
        const Wide v = side * c.v;
        if (v >= 0) ws.side.push_back({c.u, v, p.weight, p.id});
    }
    std::sort(ws.side.begin(), ws.side.end(), [](const Projected& a, const Projected& b) {
        if (a.v != b.v) return a.v < b.v;
        if (a.u != b.u) return a.u < b.u;
        return a.id < b.id;
    });

    ws.tree.clear();
    std::optional<WeightedRect> best;
    std::optional<Wide> best_left_key;

    std::size_t k = 0;
    const std::size_t total = ws.side.size();
    while (k < total) {
        const Wide level = ws.side[k].v;
        std::size_t e = k;
        // The closed top edge holds the whole cohort, so insert it first.
        for (; e < total && ws.side[e].v == level; ++e) ws.tree.insert(ws.side[e].u, ws.side[e].weight);

        for (std::size_t i = k; i < e; ++i) {
            if (ws.side[i].weight <= 0) continue;
            // Best run of u-groups containing the top point. The bottom edge
            // only needs to lie on the anchor line, not cover both anchors.
            const Wide ui = ws.side[i].u;
            const auto right = ws.tree.suffix_max(ui);
            assert(right);
            const auto left = ws.tree.prefix_min(ui);
            // No key on the left (or none below zero) means an open left side.
            const bool open_left = !left || left->weight >= 0;
            const std::int64_t weight = right->weight - (open_left ? 0 : left->weight);
            if (!best || weight > best->weight) {
                best = WeightedRect{RectKind::Framed, frame, side, kWideNegInf, right->key, level, weight};
                best_left_key = open_left ? std::nullopt : std::optional<Wide>(left->key);
            }
        }
        k = e;
    }

    if (best && best_left_key) {
        // Tighten the left edge to the first point right of the excluded key.
        Wide left = kWidePosInf;
        for (const Projected& p : ws.side) {
            if (p.v > best->top) break;
            if (p.u > *best_left_key) left = std::min(left, p.u);
        }
        best->left = left;
    }
    return best;
}

}  // namespace

std::optional<WeightedRect> process_pair_weighted(std::span<const WeightedPoint2> pts, const Frame& frame, int side,
                                                  SolveStats& stats) {
    Workspace ws(pts.size());
    ++stats.candidate_pairs;
    return sweep_pair(pts, frame, side, ws);
}

WeightedRect solve_lwr(std::span<const WeightedPoint2> pts, SolveStats& stats, std::size_t* aux_bytes) {
    WeightedRect best;
    bool found = false;
    auto offer = [&](const WeightedRect& r) {
        if (!found || r.weight > best.weight) {
            best = r;
            found = true;
        }
    };

    // Single locations: the rectangle shrunk onto one spot (all coincident
    // points count). Covers inputs where every weight is negative.
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool first = true;
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (pts[j].x != pts[i].x || pts[j].y != pts[i].y) continue;
            if (j < i) first = false;
            sum += pts[j].weight;
        }
        if (!first) continue;
        WeightedRect r;
        r.kind = RectKind::Point;
        r.frame = Frame{pts[i].x, pts[i].y, pts[i].x, pts[i].y, pts[i].id, pts[i].id};
        r.weight = sum;
        offer(r);
    }

    Workspace ws(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!pts[i].red()) continue;
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (!pts[j].red()) continue;
            const auto frame = Frame::make(pts[i], pts[j]);
            if (!frame) continue;
            for (int side : {1, -1}) {
                ++stats.candidate_pairs;
                if (auto r = sweep_pair(pts, *frame, side, ws)) offer(*r);
            }
        }
    }
    if (aux_bytes) *aux_bytes = ws.bytes();
    return best;
}

bool weighted_rect_contains(const WeightedRect& rect, const WeightedPoint2& p) {
    if (rect.kind == RectKind::Plane) return true;
    if (rect.kind == RectKind::Point) return p.x == rect.frame.px && p.y == rect.frame.py;
    const FrameCoords c = frame_coords(p, rect.frame);
    const Wide v = rect.side * c.v;
    return rect.left <= c.u && c.u <= rect.right && 0 <= v && v <= rect.top;
}

std::int64_t rescan_weight(std::span<const WeightedPoint2> pts, const WeightedRect& rect) {
    std::int64_t sum = 0;
    for (const WeightedPoint2& p : pts)
        if (weighted_rect_contains(rect, p)) sum += p.weight;
    return sum;
}

}  // namespace geosep
